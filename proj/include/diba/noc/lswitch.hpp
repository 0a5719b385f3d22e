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

/// 1xN switch inside a brick. Data streams go to the slots in their S-filter
/// mask; instructions of either kind are broadcast to every slot. Tuple
/// boundaries come from the tail sideband.
class LSwitch final : public Block {
 public:
  LSwitch(BlockId id, std::size_t ports);

  BlockId id() const { return id_; }
  std::size_t ports() const { return outputs_.size(); }
  void connect_input(BoundedBuffer* link) { input_ = link; }
  void connect_output(std::size_t port, BoundedBuffer* link) { outputs_.at(port) = link; }

  const RoutingTable& table() const { return table_; }
  void program(const NocInstruction& instr);

  bool step() override;
  bool idle() const override { return !in_message_; }
  std::string describe() const override;

 private:
  BlockId id_;
  RoutingTable table_;
  BoundedBuffer* input_ = nullptr;
  std::vector<BoundedBuffer*> outputs_;
  bool in_message_ = false;
  std::uint8_t mask_ = 0;
};

}  // namespace diba::noc
