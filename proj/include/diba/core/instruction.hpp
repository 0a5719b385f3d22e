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
#include <string>
#include <vector>

#include "diba/core/segment.hpp"
#include "diba/core/stream.hpp"

namespace diba {

enum class SwitchKind : std::uint8_t { kGSwitchA = 0, kLSwitch = 1 };

/// Programs one routing-table entry in the switch whose block id matches.
///
/// Wire layout, MSB to LSB: tag=1 (3) | kind (1) | b_id (12) | stream (3) |
/// mask (4) | seg_count (6) | zero padding (35).
/// A GSwitch-A mask uses the low two bits: bit 0 south, bit 1 east.
struct NocInstruction {
  SwitchKind kind = SwitchKind::kGSwitchA;
  BlockId b_id;
  StreamId stream;
  std::uint8_t mask = 0;
  std::uint8_t seg_count = 0;

  bool operator==(const NocInstruction&) const = default;
};

Segment encode_noc_instruction(const NocInstruction& instr);
NocInstruction decode_noc_instruction(Segment segment);
/// Text form `kind:b_id:stream:mask:segs`, e.g. `A:23:4:01:3`.
std::string to_string(const NocInstruction& instr);
NocInstruction parse_noc_instruction(const std::string& text);

enum class AtomOp : std::uint8_t {
  kLess = 0,
  kGreater = 1,
  kEqual = 2,
  kNotEqual = 3,
  kLessEqual = 4,
  kGreaterEqual = 5,
  kSet = 6,  // field holds a parameter id
};

namespace params {
inline constexpr std::uint8_t kEndCount = 0;
inline constexpr std::uint8_t kLimit = 1;
}  // namespace params

/// `field op value`; for kSet the field is a parameter id.
struct Atom {
  std::uint8_t field = 0;
  AtomOp op = AtomOp::kEqual;
  std::uint32_t value = 0;

  bool operator==(const Atom&) const = default;
};

bool evaluate(const Atom& atom, std::uint64_t field_value);
std::string to_string(AtomOp op);
AtomOp parse_atom_op(const std::string& text);

/// Configures the processing unit at b_id.
///
/// First segment: tag=0 (3) | b_id (12) | atom_count (3) | atom (43).
/// Each further atom rides in its own NULL-tagged segment, left aligned.
/// Atom: field (8) | op (3) | value (32).
struct PuInstruction {
  BlockId b_id;
  std::vector<Atom> atoms;

  bool operator==(const PuInstruction&) const = default;
};

inline constexpr std::size_t kMaxAtoms = 7;

std::vector<Segment> encode_pu_instruction(const PuInstruction& instr);
PuInstruction decode_pu_instruction(std::span<const Segment> segments);
/// Segment count of a PU instruction given its first segment.
std::size_t pu_instruction_length(Segment head);
BlockId pu_instruction_target(Segment head);
std::string to_string(const PuInstruction& instr);

}  // namespace diba
