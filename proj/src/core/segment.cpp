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

#include "diba/core/segment.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"

namespace diba {

Segment::Segment(StreamId tag, std::uint64_t payload) {
  if (tag.value > 7) throw CodecError(fmt::format("stream tag {} exceeds 3 bits", tag.value));
  if (payload > kPayloadMask) throw CodecError(fmt::format("payload {:#x} exceeds 61 bits", payload));
  bits_ = (std::uint64_t{tag.value} << kPayloadBits) | payload;
}

std::string to_string(StreamId s) {
  switch (s.value) {
    case 0: return "PU";
    case 1: return "NOC";
    case 2: return "LINEITEM";
    case 3: return "ORDERS";
    case 4: return "CUSTOMER";
    case 5: return "END";
    case 6: return "RESULT";
    case 7: return "NULL";
  }
  return fmt::format("?{}", s.value);
}

}  // namespace diba
