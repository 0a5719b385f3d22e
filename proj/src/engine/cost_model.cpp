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

#include "diba/engine/cost_model.hpp"

#include "diba/core/error.hpp"
#include "diba/noc/network_interface.hpp"

namespace diba {

void CostModel::validate() const {
  (void)noc::transfer_cycles(ni_lanes);
  if (selection == 0 || aggregation == 0 || hash_probe == 0 || insert == 0 || pass_through == 0)
    throw ConfigError("per-tuple unit costs must be at least one cycle");
}

std::uint32_t CostModel::ni_cycles_per_flit() const { return noc::transfer_cycles(ni_lanes); }

}  // namespace diba
