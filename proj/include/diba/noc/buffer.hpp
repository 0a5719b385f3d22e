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

#include <cstddef>
#include <cstdint>
#include <deque>

#include "diba/noc/flit.hpp"

namespace diba::noc {

/// FIFO link between two blocks. Pushes made during a cycle only become
/// visible after commit(), so a flit crosses at most one link per cycle.
/// An optional serialization cost limits the link to one push every
/// `cycles_per_flit` cycles.
class BoundedBuffer {
 public:
  static constexpr std::size_t kDefaultCapacity = 16;

  explicit BoundedBuffer(std::size_t capacity = kDefaultCapacity, std::uint32_t cycles_per_flit = 1);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return visible_.size() + staged_.size(); }
  bool empty() const { return visible_.empty(); }
  bool drained() const { return visible_.empty() && staged_.empty(); }
  bool can_push() const { return size() < capacity_ && cooldown_ == 0; }

  /// Throws SimulationFault when the buffer is full or still serializing.
  void push(const Flit& f);
  const Flit& front() const;
  Flit pop();

  /// Publishes staged flits and ticks the serializer. Returns true if anything changed.
  bool commit();
  std::uint32_t cooldown() const { return cooldown_; }
  void skip(std::uint64_t cycles);

 private:
  std::size_t capacity_;
  std::uint32_t cycles_per_flit_;
  std::uint32_t cooldown_ = 0;
  std::deque<Flit> visible_;
  std::deque<Flit> staged_;
};

}  // namespace diba::noc
