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

#include "diba/join/circular_join.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"

namespace diba::join {

CircularJoin::CircularJoin(std::vector<StageSpec> stages, const HbsjConfig& cfg) : specs_(std::move(stages)) {
  if (specs_.size() < 2) throw ConfigError("a multiway join needs at least two stages");
  windows_.reserve(specs_.size());
  for (const auto& s : specs_) {
    if (s.bindings.empty()) throw ConfigError(fmt::format("stage '{}' has no probe binding", s.name));
    windows_.emplace_back(cfg, std::vector<std::size_t>{s.key_field});
  }
}

void CircularJoin::clear() {
  for (auto& w : windows_) w.clear();
}

CircularJoin::StepResult CircularJoin::step(const Tuple& t, const CostModel& cost) {
  StepResult r;
  const std::size_t n = specs_.size();
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (specs_[i].origin != t.stream) continue;
    const auto ins = windows_[i].insert(t);
    r.cycles += cost.insert + (ins.expired ? cost.expire : 0);
    done[i] = true;
    --remaining;
    start = i + 1;
  }
  if (start == n && remaining == n)
    throw SimulationFault(fmt::format("stream {} has no stage in this join", t.stream.value));

  std::array<bool, streams::kCount> present{};
  present[t.stream.value] = true;
  std::vector<Composite> inter(1);
  inter[0][t.stream.value] = t;

  std::size_t pos = start;
  std::size_t idle_visits = 0;
  while (remaining > 0 && !inter.empty()) {
    const std::size_t j = pos++ % n;
    if (done[j]) continue;
    const StageSpec& st = specs_[j];
    if (present[st.origin.value]) {
      r.cycles += cost.pass_through;
      done[j] = true;
      --remaining;
      idle_visits = 0;
      continue;
    }
    const Binding* bind = nullptr;
    for (const auto& b : st.bindings)
      if (present[b.stream.value]) {
        bind = &b;
        break;
      }
    if (bind == nullptr) {
      if (++idle_visits > n) throw ConfigError(fmt::format("stage '{}' can never be probed", st.name));
      continue;
    }
    std::vector<Composite> next;
    for (const auto& c : inter) {
      const std::uint64_t key = c[bind->stream.value]->values.at(bind->field);
      std::size_t scanned = 0;
      const auto matches = windows_[j].probe(0, key, &scanned);
      r.cycles += cost.hash_probe + scanned * cost.overflow_scan;
      for (const Tuple* m : matches) {
        bool ok = true;
        for (const auto& b : st.bindings)
          if (present[b.stream.value] && c[b.stream.value]->values.at(b.field) != m->values.at(st.key_field)) ok = false;
        if (!ok) continue;
        Composite nc = c;
        nc[st.origin.value] = *m;
        next.push_back(std::move(nc));
      }
    }
    inter = std::move(next);
    present[st.origin.value] = true;
    done[j] = true;
    --remaining;
    idle_visits = 0;
  }
  if (remaining == 0) r.outputs = std::move(inter);
  return r;
}

}  // namespace diba::join
