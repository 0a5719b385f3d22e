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

#include "diba/noc/gswitch_a.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"

namespace diba::noc {

GSwitchA::GSwitchA(BlockId id) : id_(id) {}

void GSwitchA::program(const NocInstruction& instr) {
  table_ = program_switch(std::move(table_), SwitchKind::kGSwitchA, id_, instr);
}

bool GSwitchA::step() {
  bool active = false;
  for (std::size_t k = 0; k < 2; ++k) active |= advance((priority_ + k) % 2);
  if (active) priority_ ^= 1;
  return active;
}

bool GSwitchA::advance(std::size_t i) {
  BoundedBuffer* in = inputs_[i];
  if (in == nullptr || in->empty()) return false;
  Lock& lk = locks_[i];
  bool changed = false;
  if (!lk.active) {
    const Segment head = in->front().segment;
    const StreamId tag = head.tag();
    std::uint8_t mask = 0;
    std::size_t length = 1;
    if (tag == streams::kNull) {
      throw SimulationFault(fmt::format("orphan continuation at block {}", id_.value));
    } else if (tag == streams::kNocInstruction) {
      mask = fanout_[i];
    } else if (tag == streams::kPuInstruction) {
      mask = fanout_[i];
      length = pu_instruction_length(head);
    } else {
      const RoutingEntry* e = table_.find(tag);
      if (e == nullptr) throw SimulationFault(fmt::format("unrouted stream {} at block {}", tag.value, id_.value));
      mask = e->dest_mask;
      length = e->seg_count;
    }
    for (std::size_t p = 0; p < 2; ++p) {
      if (!(mask >> p & 1)) continue;
      if (owner_[p] != -1) return false;
      if (outputs_[p] == nullptr)
        throw SimulationFault(fmt::format("stream {} routed to unconnected port {} at block {}", tag.value, p,
                                          id_.value));
    }
    for (std::size_t p = 0; p < 2; ++p)
      if (mask >> p & 1) owner_[p] = static_cast<int>(i);
    lk = Lock{true, mask, length, 0, tag};
    if (tag == streams::kNocInstruction) program(decode_noc_instruction(head));
    changed = true;
  }
  for (std::size_t p = 0; p < 2; ++p)
    if ((lk.mask >> p & 1) && !outputs_[p]->can_push()) return changed;
  const Flit f = in->pop();
  if (lk.sent > 0 && !f.segment.is_continuation())
    throw SimulationFault(fmt::format("segment count mismatch for stream {} at block {}: tuple ended after {} of {}",
                                      lk.stream.value, id_.value, lk.sent, lk.length));
  const bool last = lk.sent + 1 == lk.length;
  if (f.tail != last)
    throw SimulationFault(fmt::format("segment count mismatch for stream {} at block {}: table says {}",
                                      lk.stream.value, id_.value, lk.length));
  for (std::size_t p = 0; p < 2; ++p)
    if (lk.mask >> p & 1) outputs_[p]->push(f);
  ++lk.sent;
  if (last) {
    for (std::size_t p = 0; p < 2; ++p)
      if (lk.mask >> p & 1) owner_[p] = -1;
    lk.active = false;
  }
  return true;
}

bool GSwitchA::idle() const { return !locks_[0].active && !locks_[1].active; }

std::string GSwitchA::describe() const { return fmt::format("gswitch-a {}", id_.value); }

}  // namespace diba::noc
