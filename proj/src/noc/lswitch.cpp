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

#include "diba/noc/lswitch.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"

namespace diba::noc {

LSwitch::LSwitch(BlockId id, std::size_t ports) : id_(id), outputs_(ports, nullptr) {
  if (ports == 0 || ports > 4) throw ConfigError(fmt::format("LSwitch needs 1..4 ports, got {}", ports));
}

void LSwitch::program(const NocInstruction& instr) {
  if (instr.b_id == id_ && instr.kind == SwitchKind::kLSwitch && (instr.mask >> outputs_.size()) != 0)
    throw SimulationFault(fmt::format("mask {:#x} names missing slots at block {}", instr.mask, id_.value));
  table_ = program_switch(std::move(table_), SwitchKind::kLSwitch, id_, instr);
}

bool LSwitch::step() {
  if (input_ == nullptr || input_->empty()) return false;
  const Flit& f = input_->front();
  if (!in_message_) {
    const StreamId tag = f.segment.tag();
    if (tag == streams::kNull) throw SimulationFault(fmt::format("orphan continuation at block {}", id_.value));
    if (tag == streams::kNocInstruction || tag == streams::kPuInstruction) {
      mask_ = static_cast<std::uint8_t>((1u << outputs_.size()) - 1);
    } else {
      const RoutingEntry* e = table_.find(tag);
      if (e == nullptr) throw SimulationFault(fmt::format("unrouted stream {} at block {}", tag.value, id_.value));
      mask_ = e->dest_mask;
    }
  } else if (!f.segment.is_continuation()) {
    throw SimulationFault(fmt::format("tagged segment inside a tuple at block {}", id_.value));
  }
  for (std::size_t p = 0; p < outputs_.size(); ++p)
    if ((mask_ >> p & 1) && (outputs_[p] == nullptr || !outputs_[p]->can_push())) return false;
  const Flit flit = input_->pop();
  if (!in_message_ && flit.segment.tag() == streams::kNocInstruction)
    program(decode_noc_instruction(flit.segment));
  for (std::size_t p = 0; p < outputs_.size(); ++p)
    if (mask_ >> p & 1) outputs_[p]->push(flit);
  in_message_ = !flit.tail;
  return true;
}

std::string LSwitch::describe() const { return fmt::format("lswitch {}", id_.value); }

}  // namespace diba::noc
