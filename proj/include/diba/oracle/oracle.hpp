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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diba/core/tpch_schema.hpp"
#include "diba/core/tuple.hpp"
#include "diba/tpch/datagen.hpp"

namespace diba::oracle {

/// Reference answers built with plain loops over the raw table text. Nothing
/// here touches the hash join, the network or the processing units.

/// Selected Q3 inputs in table order, q3 layouts.
struct Q3Inputs {
  std::vector<Tuple> lineitem;
  std::vector<Tuple> orders;
  std::vector<Tuple> customer;
};
Q3Inputs q3_selected(const tpch::Dataset& d, const Q3Params& p);

/// Unbounded three-way join in q3_joined layout.
std::vector<Tuple> join_q3(const Q3Inputs& in);

/// Sliding-window join over an arrival sequence. Each arrival enters its
/// stream's window (dropping that stream's oldest tuple once `window` are
/// held) and pairs with whatever the other two windows hold at that moment.
std::vector<Tuple> window_join_q3(std::span<const Tuple> arrivals, std::size_t window);

/// Group by (l_orderkey, o_orderdate, o_shippriority), sum revenue, sort by
/// revenue descending then l_orderkey, keep `limit` rows (0 keeps all).
std::vector<Tuple> finish_q3(std::span<const Tuple> joined, std::uint32_t limit);

/// Full relational Q3. Equals the streamed answer whenever no window expires.
std::vector<Tuple> oracle_q3(const tpch::Dataset& d, const Q3Params& p = q3_defaults());

/// Q3 as seen by a windowed join that received `arrivals` in order.
std::vector<Tuple> oracle_q3_windowed(std::span<const Tuple> arrivals, std::size_t window,
                                      std::uint32_t limit = q3_defaults().limit);

/// Q1 in q1_group layout, sorted by (l_returnflag, l_linestatus).
std::vector<Tuple> oracle_q1(const tpch::Dataset& d, const Q1Params& p = q1_defaults());

}  // namespace diba::oracle
