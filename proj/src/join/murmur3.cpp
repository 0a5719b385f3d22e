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

#include "diba/join/murmur3.hpp"

#include <array>
#include <bit>

namespace diba::join {

std::uint32_t murmur3_32(std::span<const std::uint8_t> data, std::uint32_t seed) {
  constexpr std::uint32_t c1 = 0xcc9e2d51u;
  constexpr std::uint32_t c2 = 0x1b873593u;
  const std::size_t len = data.size();
  const std::size_t blocks = len / 4;
  std::uint32_t h = seed;

  for (std::size_t i = 0; i < blocks; ++i) {
    std::uint32_t k = std::uint32_t{data[4 * i]} | std::uint32_t{data[4 * i + 1]} << 8 |
                      std::uint32_t{data[4 * i + 2]} << 16 | std::uint32_t{data[4 * i + 3]} << 24;
    k *= c1;
    k = std::rotl(k, 15);
    k *= c2;
    h ^= k;
    h = std::rotl(h, 13);
    h = h * 5 + 0xe6546b64u;
  }

  std::uint32_t k = 0;
  const std::uint8_t* tail = data.data() + blocks * 4;
  switch (len & 3) {
    case 3: k ^= std::uint32_t{tail[2]} << 16; [[fallthrough]];
    case 2: k ^= std::uint32_t{tail[1]} << 8; [[fallthrough]];
    case 1:
      k ^= tail[0];
      k *= c1;
      k = std::rotl(k, 15);
      k *= c2;
      h ^= k;
  }

  h ^= static_cast<std::uint32_t>(len);
  h ^= h >> 16;
  h *= 0x85ebca6bu;
  h ^= h >> 13;
  h *= 0xc2b2ae35u;
  h ^= h >> 16;
  return h;
}

std::uint32_t hash_key(std::uint64_t key, std::uint32_t seed) {
  std::array<std::uint8_t, 8> bytes{};
  for (std::size_t i = 0; i < 8; ++i) bytes[i] = static_cast<std::uint8_t>(key >> (8 * i));
  const std::size_t n = key > 0xFFFFFFFFu ? 8 : 4;
  return murmur3_32(std::span<const std::uint8_t>(bytes.data(), n), seed);
}

}  // namespace diba::join
