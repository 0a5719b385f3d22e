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

#include <ostream>
#include <vector>

#include "diba/core/tpch_schema.hpp"
#include "diba/engine/engine.hpp"
#include "diba/tpch/datagen.hpp"
#include "diba/topology/matrix.hpp"
#include "diba/topology/plan.hpp"

namespace diba::tpch {

enum class JoinVariant { kOptimized, kDirect };

topology::QueryPlan q3_plan(const Q3Params& p = q3_defaults(), JoinVariant v = JoinVariant::kOptimized);
topology::QueryPlan q1_plan(const Q1Params& p = q1_defaults());

/// 4x1: selections, join, group-by, order-by, one brick each.
topology::TopologyMatrix q3_topology(JoinVariant v = JoinVariant::kOptimized);
/// 3x1: selection, group-by, order-by.
topology::TopologyMatrix q1_topology();
/// 4x2: Q3 bricks in column 0, Q1 bricks in column 1.
topology::TopologyMatrix combined_topology();

std::vector<engine::StreamSource> q3_sources(const Dataset& d);
std::vector<engine::StreamSource> q1_sources(const Dataset& d);

/// `l_orderkey,revenue,o_orderdate,o_shippriority`; revenue with four decimals.
void write_q3_results(std::ostream& os, const std::vector<Tuple>& rows);
/// Q1 columns; sums exact, averages rounded half up to two decimals.
void write_q1_results(std::ostream& os, const std::vector<Tuple>& rows);

}  // namespace diba::tpch
