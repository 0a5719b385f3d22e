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

#include <vector>

#include "diba/noc/block.hpp"
#include "diba/noc/buffer.hpp"

namespace diba::noc {

/// Mx1 gatherer. Picks ports round-robin and drains the chosen port until the
/// tuple's tail so multi-segment tuples are never interleaved.
class Collector final : public Block {
 public:
  Collector(BlockId id, std::size_t ports);

  void connect_input(std::size_t port, BoundedBuffer* link) { inputs_.at(port) = link; }
  void connect_output(BoundedBuffer* link) { output_ = link; }

  bool step() override;
  bool idle() const override { return current_ < 0; }
  std::string describe() const override;

 private:
  BlockId id_;
  std::vector<BoundedBuffer*> inputs_;
  BoundedBuffer* output_ = nullptr;
  int current_ = -1;
  std::size_t next_ = 0;
};

}  // namespace diba::noc
