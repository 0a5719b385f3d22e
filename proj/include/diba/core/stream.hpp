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

#include <compare>
#include <cstdint>
#include <string>

namespace diba {

/// 3-bit tag carried by every segment.
struct StreamId {
  std::uint8_t value = 0;

  constexpr auto operator<=>(const StreamId&) const = default;

  /// True for tags that carry tuples (including END).
  constexpr bool is_data() const { return value >= 2 && value <= 6; }
};

namespace streams {
inline constexpr StreamId kPuInstruction{0};
inline constexpr StreamId kNocInstruction{1};
inline constexpr StreamId kLineitem{2};
inline constexpr StreamId kOrders{3};
inline constexpr StreamId kCustomer{4};
inline constexpr StreamId kEnd{5};
// Intermediate results; the Q1 lineitem projection shares it.
inline constexpr StreamId kResult{6};
inline constexpr StreamId kNull{7};
inline constexpr unsigned kCount = 8;
}  // namespace streams

/// Index of a block (switch or slot) in a topology instance; 12 bits on the wire.
struct BlockId {
  std::uint16_t value = 0;

  constexpr auto operator<=>(const BlockId&) const = default;
};

inline constexpr std::uint16_t kMaxBlockId = (1u << 12) - 1;

std::string to_string(StreamId s);

}  // namespace diba
