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
#include <map>
#include <string>
#include <vector>

#include "diba/core/instruction.hpp"
#include "diba/noc/flit.hpp"
#include "diba/noc/routing_table.hpp"
#include "diba/topology/instance.hpp"
#include "diba/topology/plan.hpp"

namespace diba::topology {

/// Everything needed to deploy one query: switch instructions (in block-id
/// order) followed by PU instructions, plus the bookkeeping the engine needs.
struct InstructionProgram {
  Deployment deployment;
  std::vector<NocInstruction> switch_instructions;
  std::vector<PuInstruction> unit_instructions;
  std::map<std::uint16_t, noc::RoutingTable> tables;  // intended switch tables after deployment

  std::vector<noc::Flit> flits() const;
  /// One text line per instruction.
  std::vector<std::string> dump() const;
  std::size_t size() const { return switch_instructions.size() + unit_instructions.size(); }
};

/// Maps the plan onto free slots of `instance`, merging with routes of
/// queries already deployed there. Throws PlacementError when no mapping
/// exists and ConfigError for malformed plans.
InstructionProgram assign_query(const QueryPlan& plan, const TopologyInstance& instance);

/// Injects the program, runs until quiescent and checks that every
/// addressed block exists and every switch holds its intended table.
/// Records the deployment on the instance.
void deploy(TopologyInstance& instance, const InstructionProgram& program, std::uint64_t cycle_cap = 10'000'000);

}  // namespace diba::topology
