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

#include "diba/noc/gswitch_b.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"

namespace diba::noc {

GSwitchB::GSwitchB(BlockId id, std::size_t ports, std::size_t shared_capacity)
    : id_(id), outputs_(ports, nullptr), ring_(shared_capacity), cursor_(ports, 0) {
  if (ports == 0 || ports > 4) throw ConfigError(fmt::format("GSwitch-B needs 1..4 ports, got {}", ports));
  if (shared_capacity == 0) throw ConfigError("GSwitch-B shared buffer must be non-empty");
}

void GSwitchB::program(const NocInstruction& instr) {
  table_ = program_switch(std::move(table_), SwitchKind::kLSwitch, id_, instr);
}

void GSwitchB::release_head() {
  while (count_ > 0 && ring_[head_].mask == 0) {
    head_ = (head_ + 1) % ring_.size();
    --count_;
    for (auto& c : cursor_) c = c > 0 ? c - 1 : 0;
  }
}

bool GSwitchB::step() {
  bool active = false;
  for (std::size_t p = 0; p < outputs_.size(); ++p) {
    auto& c = cursor_[p];
    while (c < count_ && !(ring_[slot(c)].mask >> p & 1)) ++c;
    if (c < count_ && outputs_[p] != nullptr && outputs_[p]->can_push()) {
      Entry& e = ring_[slot(c)];
      outputs_[p]->push(e.flit);
      e.mask = static_cast<std::uint8_t>(e.mask & ~(1u << p));
      ++c;
      active = true;
    }
  }
  release_head();

  if (input_ != nullptr && !input_->empty() && count_ < ring_.size()) {
    const Flit f = input_->pop();
    if (!in_message_) {
      const StreamId tag = f.segment.tag();
      if (tag == streams::kNull) throw SimulationFault(fmt::format("orphan continuation at block {}", id_.value));
      if (tag == streams::kNocInstruction || tag == streams::kPuInstruction) {
        mask_ = static_cast<std::uint8_t>((1u << outputs_.size()) - 1);
        if (tag == streams::kNocInstruction) program(decode_noc_instruction(f.segment));
      } else {
        const RoutingEntry* e = table_.find(tag);
        if (e == nullptr) throw SimulationFault(fmt::format("unrouted stream {} at block {}", tag.value, id_.value));
        mask_ = e->dest_mask;
      }
    } else if (!f.segment.is_continuation()) {
      throw SimulationFault(fmt::format("tagged segment inside a tuple at block {}", id_.value));
    }
    ring_[slot(count_)] = Entry{f, mask_};
    ++count_;
    in_message_ = !f.tail;
    active = true;
  }
  return active;
}

std::string GSwitchB::describe() const { return fmt::format("gswitch-b {}", id_.value); }

}  // namespace diba::noc
