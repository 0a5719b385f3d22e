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

#include "diba/noc/routing_table.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"

namespace diba::noc {

void RoutingTable::upsert(const RoutingEntry& e) {
  if (e.dest_mask == 0) throw SimulationFault(fmt::format("zero mask for stream {}", e.stream.value));
  slots_.at(e.stream.value) = e;
}

const RoutingEntry* RoutingTable::find(StreamId s) const {
  const auto& slot = slots_.at(s.value);
  return slot ? &*slot : nullptr;
}

std::vector<RoutingEntry> RoutingTable::entries() const {
  std::vector<RoutingEntry> out;
  for (const auto& s : slots_)
    if (s) out.push_back(*s);
  return out;
}

std::size_t RoutingTable::size() const {
  std::size_t n = 0;
  for (const auto& s : slots_) n += s.has_value();
  return n;
}

RoutingTable program_switch(RoutingTable table, SwitchKind kind, BlockId self, const NocInstruction& in) {
  if (in.b_id != self) return table;
  if (in.kind != kind)
    throw SimulationFault(fmt::format("instruction kind mismatch at block {}", self.value));
  table.upsert(RoutingEntry{in.stream, in.seg_count, in.mask});
  return table;
}

}  // namespace diba::noc
