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

namespace diba::join {

inline constexpr std::uint32_t kSeed1 = 0x9747B28Cu;
inline constexpr std::uint32_t kSeed2 = 0x85EBCA6Bu;

/// MurmurHash3 x86_32 over raw bytes.
std::uint32_t murmur3_32(std::span<const std::uint8_t> bytes, std::uint32_t seed);
/// Hash of a join key: its 4 little-endian bytes, or 8 if it does not fit in 32 bits.
std::uint32_t hash_key(std::uint64_t key, std::uint32_t seed);

}  // namespace diba::join
