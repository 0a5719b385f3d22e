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

#include "diba/noc/collector.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"

namespace diba::noc {

Collector::Collector(BlockId id, std::size_t ports) : id_(id), inputs_(ports, nullptr) {}

bool Collector::step() {
  bool changed = false;
  if (current_ < 0) {
    const std::size_t n = inputs_.size();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t p = (next_ + k) % n;
      if (inputs_[p] != nullptr && !inputs_[p]->empty()) {
        if (inputs_[p]->front().segment.is_continuation())
          throw SimulationFault(fmt::format("orphan continuation on port {} of collector {}", p, id_.value));
        current_ = static_cast<int>(p);
        next_ = (p + 1) % n;
        changed = true;
        break;
      }
    }
    if (current_ < 0) return false;
  }
  BoundedBuffer* in = inputs_[static_cast<std::size_t>(current_)];
  if (in->empty() || !output_->can_push()) return changed;
  const Flit f = in->pop();
  output_->push(f);
  if (f.tail) current_ = -1;
  return true;
}

std::string Collector::describe() const { return fmt::format("collector {}", id_.value); }

}  // namespace diba::noc
