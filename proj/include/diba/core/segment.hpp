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

#include "diba/core/stream.hpp"

namespace diba {

/// One 64-bit word on the network: 3-bit stream tag in the top bits, 61-bit payload below.
class Segment {
 public:
  static constexpr unsigned kTagBits = 3;
  static constexpr unsigned kPayloadBits = 61;
  static constexpr std::uint64_t kPayloadMask = (std::uint64_t{1} << kPayloadBits) - 1;

  constexpr Segment() = default;

  /// Throws CodecError if payload does not fit in 61 bits or tag > 7.
  Segment(StreamId tag, std::uint64_t payload);

  static constexpr Segment from_bits(std::uint64_t bits) {
    Segment s;
    s.bits_ = bits;
    return s;
  }

  constexpr StreamId tag() const { return StreamId{static_cast<std::uint8_t>(bits_ >> kPayloadBits)}; }
  constexpr std::uint64_t payload() const { return bits_ & kPayloadMask; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_continuation() const { return tag() == streams::kNull; }

  constexpr bool operator==(const Segment&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace diba
