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
#include <vector>

#include "diba/noc/block.hpp"
#include "diba/noc/buffer.hpp"
#include "diba/noc/routing_table.hpp"

namespace diba::noc {

/// 1xN fan-out switch with one shared circular buffer. Each output port reads
/// the buffer through its own cursor, skipping tuples outside its mask; an
/// entry is released once every port in its mask has read it. Programmed with
/// LSwitch-kind instructions.
class GSwitchB final : public Block {
 public:
  GSwitchB(BlockId id, std::size_t ports, std::size_t shared_capacity = 64);

  BlockId id() const { return id_; }
  void connect_input(BoundedBuffer* link) { input_ = link; }
  void connect_output(std::size_t port, BoundedBuffer* link) { outputs_.at(port) = link; }

  const RoutingTable& table() const { return table_; }
  void program(const NocInstruction& instr);
  std::size_t shared_occupancy() const { return count_; }

  bool step() override;
  bool idle() const override { return count_ == 0 && !in_message_; }
  std::string describe() const override;

 private:
  struct Entry {
    Flit flit;
    std::uint8_t mask = 0;    // ports that must still read this flit
  };

  std::size_t slot(std::size_t logical) const { return (head_ + logical) % ring_.size(); }
  void release_head();

  BlockId id_;
  RoutingTable table_;
  BoundedBuffer* input_ = nullptr;
  std::vector<BoundedBuffer*> outputs_;
  std::vector<Entry> ring_;
  std::size_t head_ = 0;
  std::size_t count_ = 0;
  std::vector<std::size_t> cursor_;  // logical offsets from head_
  bool in_message_ = false;
  std::uint8_t mask_ = 0;
};

}  // namespace diba::noc
