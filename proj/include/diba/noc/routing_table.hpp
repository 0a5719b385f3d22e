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
#include <optional>
#include <vector>

#include "diba/core/instruction.hpp"
#include "diba/core/stream.hpp"

namespace diba::noc {

struct RoutingEntry {
  StreamId stream;
  std::uint8_t seg_count = 0;  // GSwitch-A only
  std::uint8_t dest_mask = 0;

  bool operator==(const RoutingEntry&) const = default;
};

/// At most one entry per stream; a new entry for a stream replaces the old one.
class RoutingTable {
 public:
  void upsert(const RoutingEntry& e);
  const RoutingEntry* find(StreamId s) const;
  std::vector<RoutingEntry> entries() const;
  std::size_t size() const;
  void clear() { slots_.fill(std::nullopt); }

  bool operator==(const RoutingTable&) const = default;

 private:
  std::array<std::optional<RoutingEntry>, 8> slots_{};
};

/// Applies `instr` to a switch of kind `kind` and id `self`. Instructions for
/// other blocks leave the table unchanged. Same id but other kind is a fault.
RoutingTable program_switch(RoutingTable table, SwitchKind kind, BlockId self, const NocInstruction& instr);

}  // namespace diba::noc
