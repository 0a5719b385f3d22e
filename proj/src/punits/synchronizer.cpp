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

#include "diba/punits/synchronizer.hpp"

#include "diba/core/error.hpp"

namespace diba::punits {

Synchronizer::Synchronizer(std::size_t ports, std::size_t key_field)
    : key_(key_field), queues_(ports), closed_(ports, false) {
  if (ports == 0) throw ConfigError("synchronizer needs at least one port");
}

void Synchronizer::push(std::size_t port, Tuple t) {
  if (closed_.at(port)) throw SimulationFault("tuple after END on a synchronizer port");
  if (t.stream == streams::kEnd) {
    closed_[port] = true;
    return;
  }
  queues_[port].push_back(std::move(t));
}

std::optional<Tuple> Synchronizer::pop() {
  std::size_t best = queues_.size();
  for (std::size_t p = 0; p < queues_.size(); ++p) {
    if (queues_[p].empty()) {
      if (!closed_[p]) return std::nullopt;  // cannot rule out a smaller key yet
      continue;
    }
    if (best == queues_.size() || queues_[p].front().values.at(key_) < queues_[best].front().values.at(key_))
      best = p;
  }
  if (best == queues_.size()) return std::nullopt;
  Tuple t = std::move(queues_[best].front());
  queues_[best].pop_front();
  return t;
}

bool Synchronizer::done() const {
  for (std::size_t p = 0; p < queues_.size(); ++p)
    if (!closed_[p] || !queues_[p].empty()) return false;
  return true;
}

std::vector<Tuple> sync_merge(const std::vector<Tuple>& a, const std::vector<Tuple>& b, std::size_t key_field) {
  Synchronizer s(2, key_field);
  for (const auto& t : a) s.push(0, t);
  for (const auto& t : b) s.push(1, t);
  s.push(0, make_end());
  s.push(1, make_end());
  std::vector<Tuple> out;
  while (auto t = s.pop()) out.push_back(std::move(*t));
  return out;
}

}  // namespace diba::punits
