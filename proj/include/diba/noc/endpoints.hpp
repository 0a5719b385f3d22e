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
#include <vector>

#include "diba/noc/block.hpp"
#include "diba/noc/buffer.hpp"

namespace diba::noc {

/// Pushes queued flits into its link as fast as the link accepts them.
class Injector final : public Block {
 public:
  void connect_output(BoundedBuffer* link) { output_ = link; }
  void enqueue(const Flit& f) { queue_.push_back(f); }
  std::size_t pending() const { return queue_.size(); }

  /// Data tuple heads pushed since the last call.
  std::uint64_t take_tuple_count();

  bool step() override;
  bool idle() const override { return queue_.empty(); }
  std::string describe() const override { return "injector"; }

 private:
  BoundedBuffer* output_ = nullptr;
  std::deque<Flit> queue_;
  std::uint64_t tuples_ = 0;
};

/// Terminal block: drains every connected port and keeps whole messages per port.
class Sink final : public Block {
 public:
  explicit Sink(std::size_t ports);

  void connect_input(std::size_t port, BoundedBuffer* link) { inputs_.at(port) = link; }
  std::size_t ports() const { return inputs_.size(); }

  /// Complete messages received on `port`, oldest first.
  const std::vector<std::vector<Segment>>& messages(std::size_t port) const { return messages_.at(port); }
  std::vector<std::vector<Segment>> take(std::size_t port);
  void clear();

  bool step() override;
  bool idle() const override;
  std::string describe() const override { return "sink"; }

 private:
  std::vector<BoundedBuffer*> inputs_;
  std::vector<std::vector<Segment>> partial_;
  std::vector<std::vector<std::vector<Segment>>> messages_;
};

}  // namespace diba::noc
