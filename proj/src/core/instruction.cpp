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

#include "diba/core/instruction.hpp"

#include <fmt/format.h>

#include <charconv>
#include <sstream>

#include "diba/core/error.hpp"

namespace diba {

namespace {

constexpr unsigned kKindShift = 60;
constexpr unsigned kBlockShift = 48;
constexpr unsigned kStreamShift = 45;
constexpr unsigned kMaskShift = 41;
constexpr unsigned kSegShift = 35;

void validate(const NocInstruction& in) {
  if (in.b_id.value > kMaxBlockId) throw CodecError(fmt::format("b_id {} exceeds 12 bits", in.b_id.value));
  if (!in.stream.is_data())
    throw CodecError(fmt::format("routing target stream {} is not a data stream", in.stream.value));
  if (in.mask == 0) throw CodecError(fmt::format("zero mask for block {}", in.b_id.value));
  if (in.kind == SwitchKind::kGSwitchA) {
    if (in.mask > 0x3) throw CodecError(fmt::format("GSwitch-A mask {:#x} exceeds 2 ports", in.mask));
    if (in.seg_count == 0) throw CodecError("GSwitch-A instruction needs seg_count >= 1");
    if (in.seg_count > 63) throw CodecError(fmt::format("seg_count {} exceeds 6 bits", in.seg_count));
  } else {
    if (in.mask > 0xF) throw CodecError(fmt::format("LSwitch mask {:#x} exceeds 4 ports", in.mask));
    if (in.seg_count != 0) throw CodecError("LSwitch instruction must carry seg_count 0");
  }
}

// Atom packing: field (8) | op (3) | value (32) = 43 bits.
constexpr unsigned kAtomBits = 43;

std::uint64_t pack_atom(const Atom& a) {
  if (static_cast<unsigned>(a.op) > 6) throw CodecError("atom op out of range");
  return (std::uint64_t{a.field} << 35) | (std::uint64_t{static_cast<std::uint8_t>(a.op)} << 32) | a.value;
}

Atom unpack_atom(std::uint64_t bits) {
  const auto op = static_cast<unsigned>((bits >> 32) & 0x7);
  if (op > 6) throw CodecError(fmt::format("unknown atom op {}", op));
  return Atom{static_cast<std::uint8_t>(bits >> 35), static_cast<AtomOp>(op),
              static_cast<std::uint32_t>(bits & 0xFFFFFFFFu)};
}

std::uint64_t parse_uint(const std::string& s, int base, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw CodecError(fmt::format("bad {} '{}'", what, s));
  return v;
}

}  // namespace

Segment encode_noc_instruction(const NocInstruction& in) {
  validate(in);
  const std::uint64_t payload = (std::uint64_t{static_cast<std::uint8_t>(in.kind)} << kKindShift) |
                                (std::uint64_t{in.b_id.value} << kBlockShift) |
                                (std::uint64_t{in.stream.value} << kStreamShift) |
                                (std::uint64_t{in.mask} << kMaskShift) |
                                (std::uint64_t{in.seg_count} << kSegShift);
  return Segment(streams::kNocInstruction, payload);
}

NocInstruction decode_noc_instruction(Segment s) {
  if (s.tag() != streams::kNocInstruction)
    throw CodecError(fmt::format("segment tag {} is not a NoC instruction", s.tag().value));
  const std::uint64_t p = s.payload();
  if (p & ((std::uint64_t{1} << kSegShift) - 1)) throw CodecError("NoC instruction padding is not zero");
  NocInstruction in;
  in.kind = static_cast<SwitchKind>((p >> kKindShift) & 1);
  in.b_id = BlockId{static_cast<std::uint16_t>((p >> kBlockShift) & 0xFFF)};
  in.stream = StreamId{static_cast<std::uint8_t>((p >> kStreamShift) & 0x7)};
  in.mask = static_cast<std::uint8_t>((p >> kMaskShift) & 0xF);
  in.seg_count = static_cast<std::uint8_t>((p >> kSegShift) & 0x3F);
  validate(in);
  return in;
}

std::string to_string(const NocInstruction& in) {
  if (in.kind == SwitchKind::kGSwitchA)
    return fmt::format("A:{}:{}:{:02b}:{}", in.b_id.value, in.stream.value, in.mask, in.seg_count);
  return fmt::format("L:{}:{}:{:04b}:{}", in.b_id.value, in.stream.value, in.mask, in.seg_count);
}

NocInstruction parse_noc_instruction(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 5) throw CodecError(fmt::format("bad instruction text '{}'", text));
  NocInstruction in;
  if (parts[0] == "A") in.kind = SwitchKind::kGSwitchA;
  else if (parts[0] == "L") in.kind = SwitchKind::kLSwitch;
  else throw CodecError(fmt::format("bad switch kind '{}'", parts[0]));
  in.b_id = BlockId{static_cast<std::uint16_t>(parse_uint(parts[1], 10, "b_id"))};
  in.stream = StreamId{static_cast<std::uint8_t>(parse_uint(parts[2], 10, "stream"))};
  in.mask = static_cast<std::uint8_t>(parse_uint(parts[3], 2, "mask"));
  in.seg_count = static_cast<std::uint8_t>(parse_uint(parts[4], 10, "seg_count"));
  validate(in);
  return in;
}

bool evaluate(const Atom& a, std::uint64_t v) {
  switch (a.op) {
    case AtomOp::kLess: return v < a.value;
    case AtomOp::kGreater: return v > a.value;
    case AtomOp::kEqual: return v == a.value;
    case AtomOp::kNotEqual: return v != a.value;
    case AtomOp::kLessEqual: return v <= a.value;
    case AtomOp::kGreaterEqual: return v >= a.value;
    case AtomOp::kSet: return true;
  }
  return false;
}

std::string to_string(AtomOp op) {
  switch (op) {
    case AtomOp::kLess: return "<";
    case AtomOp::kGreater: return ">";
    case AtomOp::kEqual: return "=";
    case AtomOp::kNotEqual: return "!=";
    case AtomOp::kLessEqual: return "<=";
    case AtomOp::kGreaterEqual: return ">=";
    case AtomOp::kSet: return "set";
  }
  return "?";
}

AtomOp parse_atom_op(const std::string& t) {
  if (t == "<") return AtomOp::kLess;
  if (t == ">") return AtomOp::kGreater;
  if (t == "=" || t == "==") return AtomOp::kEqual;
  if (t == "!=" || t == "<>") return AtomOp::kNotEqual;
  if (t == "<=") return AtomOp::kLessEqual;
  if (t == ">=") return AtomOp::kGreaterEqual;
  if (t == "set") return AtomOp::kSet;
  throw ConfigError(fmt::format("unknown operator '{}'", t));
}

std::vector<Segment> encode_pu_instruction(const PuInstruction& in) {
  if (in.b_id.value > kMaxBlockId) throw CodecError(fmt::format("b_id {} exceeds 12 bits", in.b_id.value));
  if (in.atoms.size() > kMaxAtoms)
    throw CodecError(fmt::format("{} atoms exceed the limit of {}", in.atoms.size(), kMaxAtoms));
  std::vector<Segment> out;
  std::uint64_t head = (std::uint64_t{in.b_id.value} << 46) | (std::uint64_t{in.atoms.size()} << 43);
  if (!in.atoms.empty()) head |= pack_atom(in.atoms[0]);
  out.emplace_back(streams::kPuInstruction, head);
  for (std::size_t i = 1; i < in.atoms.size(); ++i)
    out.emplace_back(streams::kNull, pack_atom(in.atoms[i]) << (Segment::kPayloadBits - kAtomBits));
  return out;
}

std::size_t pu_instruction_length(Segment head) {
  if (head.tag() != streams::kPuInstruction)
    throw CodecError(fmt::format("segment tag {} is not a PU instruction", head.tag().value));
  const std::size_t atoms = (head.payload() >> 43) & 0x7;
  return atoms == 0 ? 1 : atoms;
}

BlockId pu_instruction_target(Segment head) {
  return BlockId{static_cast<std::uint16_t>((head.payload() >> 46) & 0xFFF)};
}

PuInstruction decode_pu_instruction(std::span<const Segment> segs) {
  if (segs.empty()) throw CodecError("empty PU instruction");
  const std::size_t n = pu_instruction_length(segs[0]);
  if (segs.size() != n) throw CodecError(fmt::format("PU instruction needs {} segments, got {}", n, segs.size()));
  PuInstruction in;
  in.b_id = pu_instruction_target(segs[0]);
  const std::size_t atoms = (segs[0].payload() >> 43) & 0x7;
  if (atoms == 0) {
    if (segs[0].payload() & ((std::uint64_t{1} << kAtomBits) - 1))
      throw CodecError("PU instruction without atoms has nonzero payload");
    return in;
  }
  in.atoms.push_back(unpack_atom(segs[0].payload() & ((std::uint64_t{1} << kAtomBits) - 1)));
  for (std::size_t i = 1; i < n; ++i) {
    if (!segs[i].is_continuation())
      throw CodecError(fmt::format("PU instruction segment {} is not a continuation", i));
    in.atoms.push_back(unpack_atom(segs[i].payload() >> (Segment::kPayloadBits - kAtomBits)));
  }
  return in;
}

std::string to_string(const PuInstruction& in) {
  std::string s = fmt::format("P:{}", in.b_id.value);
  for (const auto& a : in.atoms) s += fmt::format(":{}{}{}", a.field, to_string(a.op), a.value);
  return s;
}

}  // namespace diba
