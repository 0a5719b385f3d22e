/*
 * Copyright 2026 The diba-sim Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "diba/noc/network_interface.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"

namespace diba::noc {

namespace {

void check_lanes(unsigned lanes) {
  if (lanes == 0 || lanes > 64 || 64 % lanes != 0)
    throw ConfigError(fmt::format("lane count {} must divide 64", lanes));
}

}  // namespace

std::vector<std::uint64_t> serialize(std::uint64_t word, unsigned lanes) {
  check_lanes(lanes);
  const unsigned n = 64 / lanes;
  const std::uint64_t mask = lanes == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lanes) - 1;
  std::vector<std::uint64_t> chunks(n);
  for (unsigned i = 0; i < n; ++i) chunks[i] = (word >> (64 - lanes * (i + 1))) & mask;
  return chunks;
}

std::uint64_t deserialize(std::span<const std::uint64_t> chunks, unsigned lanes) {
  check_lanes(lanes);
  if (chunks.size() != 64 / lanes)
    throw ConfigError(fmt::format("expected {} chunks for {} lanes, got {}", 64 / lanes, lanes, chunks.size()));
  std::uint64_t word = 0;
  for (auto c : chunks) {
    if (lanes < 64 && (c >> lanes) != 0) throw ConfigError(fmt::format("chunk {:#x} wider than {} lanes", c, lanes));
    word = lanes == 64 ? c : (word << lanes) | c;
  }
  return word;
}

std::uint32_t transfer_cycles(unsigned lanes) {
  check_lanes(lanes);
  return 64 / lanes;
}

}  // namespace diba::noc
