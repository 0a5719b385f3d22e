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

#include <array>
#include <cstdint>

#include "diba/noc/block.hpp"
#include "diba/noc/buffer.hpp"
#include "diba/noc/routing_table.hpp"

namespace diba::noc {

/// 2x2 global switch. Inputs: 0 west, 1 north. Outputs: 0 south, 1 east.
///
/// A tuple is routed as a unit: its input locks every output in its mask and
/// streams seg_count segments before releasing them. One flit leaves each
/// output per cycle; the two inputs take turns at priority.
class GSwitchA final : public Block {
 public:
  static constexpr std::size_t kWest = 0;
  static constexpr std::size_t kNorth = 1;
  static constexpr std::size_t kSouth = 0;
  static constexpr std::size_t kEast = 1;

  explicit GSwitchA(BlockId id);

  BlockId id() const { return id_; }
  void connect_input(std::size_t port, BoundedBuffer* link) { inputs_.at(port) = link; }
  void connect_output(std::size_t port, BoundedBuffer* link) { outputs_.at(port) = link; }
  /// Output mask that instructions arriving on `input` are copied to.
  void set_instruction_fanout(std::size_t input, std::uint8_t mask) { fanout_.at(input) = mask; }

  const RoutingTable& table() const { return table_; }
  void program(const NocInstruction& instr);

  bool step() override;
  bool idle() const override;
  std::string describe() const override;

 private:
  struct Lock {
    bool active = false;
    std::uint8_t mask = 0;
    std::size_t length = 0;
    std::size_t sent = 0;
    StreamId stream;
  };

  bool advance(std::size_t input);

  BlockId id_;
  RoutingTable table_;
  std::array<BoundedBuffer*, 2> inputs_{};
  std::array<BoundedBuffer*, 2> outputs_{};
  std::array<std::uint8_t, 2> fanout_{0x3, 0x1};
  std::array<Lock, 2> locks_{};
  std::array<int, 2> owner_{-1, -1};
  std::size_t priority_ = 0;
};

}  // namespace diba::noc
