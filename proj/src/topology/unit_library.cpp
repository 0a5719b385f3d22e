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

#include "diba/topology/unit_library.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"
#include "diba/core/tpch_schema.hpp"
#include "diba/join/q3_join.hpp"
#include "diba/punits/units.hpp"

namespace diba::topology {

using punits::AggFn;

namespace {

punits::GroupSpec q3_group_spec() {
  // Keys: l_orderkey, o_orderdate, o_shippriority. Sum of price * (100 - discount).
  return punits::GroupSpec{{0, 1, 2}, {{AggFn::kRevenue, {3, 4}}}, streams::kResult};
}

punits::GroupSpec q1_group_spec() {
  // Keys: l_returnflag, l_linestatus.
  return punits::GroupSpec{{0, 1},
                           {{AggFn::kSum, {2}},
                            {AggFn::kSum, {3}},
                            {AggFn::kRevenue, {3, 4}},
                            {AggFn::kCharge, {3, 4, 5}},
                            {AggFn::kSum, {4}},
                            {AggFn::kCount, {}}},
                           streams::kResult};
}

}  // namespace

UnitLibrary UnitLibrary::standard() {
  UnitLibrary lib;
  lib.add("Q3_SEL1", [](const UnitContext&) {
    return std::make_unique<punits::SelectionUnit>("Q3_SEL1", streams::kLineitem, layouts::q3_lineitem());
  });
  lib.add("Q3_SEL2", [](const UnitContext&) {
    return std::make_unique<punits::SelectionUnit>("Q3_SEL2", streams::kCustomer, layouts::q3_customer());
  });
  lib.add("Q3_SEL3", [](const UnitContext&) {
    return std::make_unique<punits::SelectionUnit>("Q3_SEL3", streams::kOrders, layouts::q3_orders());
  });
  lib.add("Q3_CMJOIN", [](const UnitContext& ctx) { return std::make_unique<join::Q3JoinUnit>(ctx.join); });
  lib.add("Q3_CMJOIN_DIRECT",
          [](const UnitContext& ctx) { return std::make_unique<join::Q3DirectJoinUnit>(ctx.join); });
  lib.add("Q3_GROUPBY_AGG", [](const UnitContext&) {
    return std::make_unique<punits::GroupAggUnit>("Q3_GROUPBY_AGG", streams::kResult, layouts::q3_joined(),
                                                  layouts::q3_group(), q3_group_spec());
  });
  lib.add("Q3_ORDERBY", [](const UnitContext&) {
    // revenue descending, then l_orderkey ascending.
    return std::make_unique<punits::OrderByUnit>("Q3_ORDERBY", streams::kResult, layouts::q3_group(),
                                                 std::vector<punits::SortKey>{{3, true}, {0, false}}, 10);
  });
  lib.add("Q1_SEL", [](const UnitContext&) {
    return std::make_unique<punits::SelectionUnit>("Q1_SEL", streams::kResult, layouts::q1_lineitem());
  });
  lib.add("Q1_GROUPBY_AGG", [](const UnitContext&) {
    return std::make_unique<punits::GroupAggUnit>("Q1_GROUPBY_AGG", streams::kResult, layouts::q1_lineitem(),
                                                  layouts::q1_group(), q1_group_spec());
  });
  lib.add("Q1_ORDERBY", [](const UnitContext&) {
    return std::make_unique<punits::OrderByUnit>("Q1_ORDERBY", streams::kResult, layouts::q1_group(),
                                                 std::vector<punits::SortKey>{{0, false}, {1, false}}, 0);
  });
  return lib;
}

void UnitLibrary::add(const std::string& kind, UnitFactory factory) {
  if (kind == kBypass) throw ConfigError("BYPASS is built in");
  factories_[kind] = std::move(factory);
}

bool UnitLibrary::contains(const std::string& kind) const { return kind == kBypass || factories_.count(kind) > 0; }

std::unique_ptr<punits::ProcessingUnit> UnitLibrary::make(const std::string& kind, const UnitContext& ctx) const {
  auto it = factories_.find(kind);
  if (it == factories_.end()) throw ConfigError(fmt::format("unknown unit kind '{}'", kind));
  return it->second(ctx);
}

std::vector<std::string> UnitLibrary::kinds() const {
  std::vector<std::string> out{kBypass};
  for (const auto& [k, _] : factories_) out.push_back(k);
  return out;
}

}  // namespace diba::topology
