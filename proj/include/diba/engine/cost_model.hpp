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

namespace diba {

using Cycles = std::uint64_t;

/// Per-tuple cycle costs charged by processing units. The costs are
/// configuration, not constants baked into the units, so they can be
/// swapped without touching results.
struct CostModel {
  Cycles selection = 1;
  Cycles aggregation = 1;
  Cycles comparison = 1;     // one step of the order-by insertion
  Cycles hash_probe = 2;     // hash plus the parallel four-table lookup
  Cycles overflow_scan = 1;  // per occupied overflow slot visited
  Cycles insert = 1;
  Cycles expire = 1;
  Cycles pass_through = 1;
  unsigned ni_lanes = 64;    // wires per network interface; 64 means one cycle per segment

  /// Throws ConfigError on lane counts that do not divide 64.
  void validate() const;
  std::uint32_t ni_cycles_per_flit() const;

  bool operator==(const CostModel&) const = default;
};

}  // namespace diba
