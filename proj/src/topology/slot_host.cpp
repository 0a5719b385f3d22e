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

#include "diba/topology/slot_host.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "diba/core/error.hpp"

namespace diba::topology {

SlotHost::SlotHost(BlockId id, std::unique_ptr<punits::ProcessingUnit> unit, const CostModel* cost)
    : id_(id), unit_(std::move(unit)), cost_(cost) {}

bool SlotHost::step() {
  bool active = false;
  if (!pending_.empty() && output_ != nullptr && output_->can_push()) {
    output_->push(pending_.front());
    pending_.pop_front();
    active = true;
  }
  if (busy_ > 0 && --busy_ == 0) {
    pending_.insert(pending_.end(), staged_.begin(), staged_.end());
    staged_.clear();
    active = true;
  }
  // Accept new work once the previous result has mostly left; keeps the
  // output queue bounded by one message's worth.
  const std::size_t room = output_ != nullptr ? output_->capacity() : 16;
  if (busy_ == 0 && ready_ && pending_.size() <= room) {
    handle_message();
    ready_ = false;
    message_.clear();
    active = true;
  }
  if (!ready_ && input_ != nullptr && !input_->empty()) {
    const noc::Flit f = input_->pop();
    if (message_.empty() && f.segment.is_continuation())
      throw SimulationFault(fmt::format("orphan continuation at block {}", id_.value));
    message_.push_back(f.segment);
    ready_ = f.tail;
    active = true;
  }
  return active;
}

void SlotHost::handle_message() {
  const StreamId tag = message_.front().tag();
  if (tag == streams::kNocInstruction) return;
  if (tag == streams::kPuInstruction) {
    if (pu_instruction_target(message_.front()) != id_) return;
    const PuInstruction pi = decode_pu_instruction(message_);
    std::vector<Atom> rest;
    for (const auto& a : pi.atoms) {
      if (a.op == AtomOp::kSet && a.field == params::kEndCount) {
        if (a.value == 0) throw SimulationFault(fmt::format("END_COUNT 0 at block {}", id_.value));
        end_expected_ = a.value;
      } else {
        rest.push_back(a);
      }
    }
    unit_->configure(rest);
    busy_ = 1;
    return;
  }
  const TupleLayout* layout = tag == streams::kEnd ? &end_layout() : unit_->input_layout(tag);
  if (layout == nullptr)
    throw SimulationFault(fmt::format("stream {} reached unit {} at block {} which does not accept it", tag.value,
                                      unit_->kind(), id_.value));
  if (message_.size() != layout->segment_count())
    throw SimulationFault(fmt::format("segment count mismatch at block {}: stream {} sent {}, layout needs {}",
                                      id_.value, tag.value, message_.size(), layout->segment_count()));
  const Tuple t = decode_tuple(message_, *layout);
  if (tag == streams::kEnd) {
    if (++end_seen_ < end_expected_) {
      busy_ = cost_->pass_through;
      return;
    }
    end_seen_ = 0;
  } else {
    ++processed_;
    if (observer_) observer_(t);
  }
  scratch_.clear();
  busy_ = std::max<Cycles>(1, unit_->process(t, scratch_, *cost_));
  for (const auto& out : scratch_) emit(out);
}

void SlotHost::emit(const Tuple& t) {
  const TupleLayout& layout = t.stream == streams::kEnd ? end_layout() : unit_->output_layout();
  std::vector<Segment> segs;
  encode_tuple_into(t, layout, segs);
  for (std::size_t i = 0; i < segs.size(); ++i) staged_.push_back(noc::Flit{segs[i], i + 1 == segs.size()});
}

bool SlotHost::idle() const {
  return message_.empty() && !ready_ && busy_ == 0 && staged_.empty() && pending_.empty();
}

std::string SlotHost::describe() const { return fmt::format("{} {}", unit_->kind(), id_.value); }

bool BypassSlot::step() {
  if (input_ == nullptr || input_->empty() || !output_->can_push()) return false;
  output_->push(input_->pop());
  return true;
}

std::string BypassSlot::describe() const { return fmt::format("bypass {}", id_.value); }

}  // namespace diba::topology
