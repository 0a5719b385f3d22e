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
#include <deque>
#include <functional>
#include <memory>
#include <vector>

#include "diba/engine/cost_model.hpp"
#include "diba/noc/block.hpp"
#include "diba/noc/buffer.hpp"
#include "diba/punits/unit.hpp"

namespace diba::topology {

/// Hosts a processing unit in a brick slot. Reassembles tuples from flits,
/// applies PU instructions addressed to it, merges END copies (END_COUNT),
/// charges the unit's cycle cost and emits its output one flit per cycle.
class SlotHost final : public noc::Block {
 public:
  SlotHost(BlockId id, std::unique_ptr<punits::ProcessingUnit> unit, const CostModel* cost);

  BlockId id() const { return id_; }
  void connect_input(noc::BoundedBuffer* link) { input_ = link; }
  void connect_output(noc::BoundedBuffer* link) { output_ = link; }

  punits::ProcessingUnit& unit() { return *unit_; }
  const punits::ProcessingUnit& unit() const { return *unit_; }
  std::uint32_t end_count() const { return end_expected_; }
  std::uint64_t tuples_processed() const { return processed_; }
  /// Called with each data tuple before the unit processes it.
  void set_observer(std::function<void(const Tuple&)> fn) { observer_ = std::move(fn); }

  bool step() override;
  bool idle() const override;
  std::uint64_t countdown() const override { return busy_; }
  void skip(std::uint64_t cycles) override { busy_ -= cycles; }
  std::string describe() const override;

 private:
  void handle_message();
  void emit(const Tuple& t);

  BlockId id_;
  std::unique_ptr<punits::ProcessingUnit> unit_;
  const CostModel* cost_;
  noc::BoundedBuffer* input_ = nullptr;
  noc::BoundedBuffer* output_ = nullptr;
  std::vector<Segment> message_;
  bool ready_ = false;
  Cycles busy_ = 0;
  std::vector<noc::Flit> staged_;
  std::deque<noc::Flit> pending_;
  std::uint32_t end_expected_ = 1;
  std::uint32_t end_seen_ = 0;
  std::uint64_t processed_ = 0;
  std::vector<Tuple> scratch_;
  std::function<void(const Tuple&)> observer_;
};

/// Forwards every flit unchanged, instructions included.
class BypassSlot final : public noc::Block {
 public:
  explicit BypassSlot(BlockId id) : id_(id) {}

  void connect_input(noc::BoundedBuffer* link) { input_ = link; }
  void connect_output(noc::BoundedBuffer* link) { output_ = link; }

  bool step() override;
  bool idle() const override { return true; }
  std::string describe() const override;

 private:
  BlockId id_;
  noc::BoundedBuffer* input_ = nullptr;
  noc::BoundedBuffer* output_ = nullptr;
};

}  // namespace diba::topology
