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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace diba::noc {

/// Splits a 64-bit word into 64/lanes chunks of `lanes` bits, most significant first.
std::vector<std::uint64_t> serialize(std::uint64_t word, unsigned lanes);
std::uint64_t deserialize(std::span<const std::uint64_t> chunks, unsigned lanes);
/// Cycles to move one segment across an interface with `lanes` wires.
std::uint32_t transfer_cycles(unsigned lanes);

}  // namespace diba::noc
