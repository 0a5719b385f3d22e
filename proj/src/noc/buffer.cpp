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

#include "diba/noc/buffer.hpp"

#include <algorithm>

#include "diba/core/error.hpp"

namespace diba::noc {

BoundedBuffer::BoundedBuffer(std::size_t capacity, std::uint32_t cycles_per_flit)
    : capacity_(capacity), cycles_per_flit_(cycles_per_flit) {
  if (capacity_ == 0) throw ConfigError("buffer capacity must be positive");
  if (cycles_per_flit_ == 0) throw ConfigError("cycles_per_flit must be positive");
}

void BoundedBuffer::push(const Flit& f) {
  if (!can_push()) throw SimulationFault("push into a full or busy link");
  staged_.push_back(f);
  cooldown_ = cycles_per_flit_;
}

const Flit& BoundedBuffer::front() const {
  if (visible_.empty()) throw SimulationFault("front() on an empty link");
  return visible_.front();
}

Flit BoundedBuffer::pop() {
  if (visible_.empty()) throw SimulationFault("pop() on an empty link");
  Flit f = visible_.front();
  visible_.pop_front();
  return f;
}

bool BoundedBuffer::commit() {
  bool changed = !staged_.empty();
  while (!staged_.empty()) {
    visible_.push_back(staged_.front());
    staged_.pop_front();
  }
  if (cooldown_ > 0) --cooldown_;
  return changed;
}

void BoundedBuffer::skip(std::uint64_t cycles) {
  cooldown_ = static_cast<std::uint32_t>(cooldown_ > cycles ? cooldown_ - cycles : 0);
}

}  // namespace diba::noc
