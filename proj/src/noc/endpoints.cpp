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

#include "diba/noc/endpoints.hpp"

#include "diba/core/error.hpp"

namespace diba::noc {

std::uint64_t Injector::take_tuple_count() {
  const auto n = tuples_;
  tuples_ = 0;
  return n;
}

bool Injector::step() {
  if (queue_.empty() || output_ == nullptr || !output_->can_push()) return false;
  const Flit f = queue_.front();
  queue_.pop_front();
  const StreamId tag = f.segment.tag();
  if (tag.is_data() && tag != streams::kEnd) ++tuples_;
  output_->push(f);
  return true;
}

Sink::Sink(std::size_t ports) : inputs_(ports, nullptr), partial_(ports), messages_(ports) {}

std::vector<std::vector<Segment>> Sink::take(std::size_t port) {
  auto out = std::move(messages_.at(port));
  messages_.at(port).clear();
  return out;
}

void Sink::clear() {
  for (auto& m : messages_) m.clear();
}

bool Sink::step() {
  bool active = false;
  for (std::size_t p = 0; p < inputs_.size(); ++p) {
    BoundedBuffer* in = inputs_[p];
    if (in == nullptr || in->empty()) continue;
    const Flit f = in->pop();
    if (partial_[p].empty() && f.segment.is_continuation())
      throw SimulationFault("orphan continuation at the sink");
    partial_[p].push_back(f.segment);
    if (f.tail) messages_[p].push_back(std::move(partial_[p])), partial_[p].clear();
    active = true;
  }
  return active;
}

bool Sink::idle() const {
  for (const auto& p : partial_)
    if (!p.empty()) return false;
  return true;
}

}  // namespace diba::noc
