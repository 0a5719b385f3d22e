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

#include "diba/tpch/queries.hpp"

#include <fmt/format.h>

#include "diba/core/date.hpp"
#include "diba/core/error.hpp"
#include "diba/tpch/decompose.hpp"

namespace diba::tpch {

using topology::PlanOperator;
using topology::QueryPlan;
using topology::TopologyMatrix;

QueryPlan q3_plan(const Q3Params& p, JoinVariant v) {
  QueryPlan plan;
  plan.name = "q3";
  plan.sources = {{"lineitem", streams::kLineitem}, {"orders", streams::kOrders}, {"customer", streams::kCustomer}};
  plan.operators = {
      {"sel_l", "Q3_SEL1", {"lineitem"}, std::nullopt, {{"l_shipdate", AtomOp::kGreater, p.date}}},
      {"sel_c", "Q3_SEL2", {"customer"}, std::nullopt,
       {{"c_mktsegment", AtomOp::kEqual, static_cast<std::uint32_t>(p.segment)}}},
      {"sel_o", "Q3_SEL3", {"orders"}, std::nullopt, {{"o_orderdate", AtomOp::kLess, p.date}}},
      {"join", v == JoinVariant::kDirect ? "Q3_CMJOIN_DIRECT" : "Q3_CMJOIN", {"sel_l", "sel_o", "sel_c"},
       std::nullopt, {}},
      {"agg", "Q3_GROUPBY_AGG", {"join"}, std::nullopt, {}},
      {"top", "Q3_ORDERBY", {"agg"}, std::nullopt, {{"limit", AtomOp::kSet, p.limit}}},
  };
  plan.output = "top";
  plan.validate();
  return plan;
}

QueryPlan q1_plan(const Q1Params& p) {
  QueryPlan plan;
  plan.name = "q1";
  plan.sources = {{"lineitem", streams::kResult}};
  plan.operators = {
      {"sel", "Q1_SEL", {"lineitem"}, std::nullopt, {{"l_shipdate", AtomOp::kLessEqual, p.ship_cutoff}}},
      {"agg", "Q1_GROUPBY_AGG", {"sel"}, std::nullopt, {}},
      {"top", "Q1_ORDERBY", {"agg"}, std::nullopt, {}},
  };
  plan.output = "top";
  plan.validate();
  return plan;
}

TopologyMatrix q3_topology(JoinVariant v) {
  const std::string join = v == JoinVariant::kDirect ? "Q3_CMJOIN_DIRECT" : "Q3_CMJOIN";
  return TopologyMatrix{4, 1, 4,
                        {{"BYPASS", "Q3_SEL1", "Q3_SEL2", "Q3_SEL3"},
                         {"BYPASS", join},
                         {"BYPASS", "Q3_GROUPBY_AGG"},
                         {"BYPASS", "Q3_ORDERBY"}}};
}

TopologyMatrix q1_topology() {
  return TopologyMatrix{3, 1, 4, {{"BYPASS", "Q1_SEL"}, {"BYPASS", "Q1_GROUPBY_AGG"}, {"BYPASS", "Q1_ORDERBY"}}};
}

TopologyMatrix combined_topology() {
  return TopologyMatrix{4, 2, 4,
                        {{"BYPASS", "Q3_SEL1", "Q3_SEL2", "Q3_SEL3"},
                         {"BYPASS", "Q1_SEL"},
                         {"BYPASS", "Q3_CMJOIN"},
                         {"BYPASS", "Q1_GROUPBY_AGG"},
                         {"BYPASS", "Q3_GROUPBY_AGG"},
                         {"BYPASS", "Q1_ORDERBY"},
                         {"BYPASS", "Q3_ORDERBY"},
                         {"BYPASS"}}};
}

std::vector<engine::StreamSource> q3_sources(const Dataset& d) {
  return {decompose(d.lineitem, layouts::q3_lineitem(), streams::kLineitem).source,
          decompose(d.orders, layouts::q3_orders(), streams::kOrders).source,
          decompose(d.customer, layouts::q3_customer(), streams::kCustomer).source};
}

std::vector<engine::StreamSource> q1_sources(const Dataset& d) {
  return {decompose(d.lineitem, layouts::q1_lineitem(), streams::kResult).source};
}

namespace {

std::string fixed(std::uint64_t v, unsigned decimals) {
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < decimals; ++i) scale *= 10;
  return fmt::format("{}.{:0{}}", v / scale, v % scale, decimals);
}

// num / den in hundredths, half up.
std::string average(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw SimulationFault("empty group in aggregate output");
  return fixed((2 * num + den) / (2 * den), 2);
}

}  // namespace

void write_q3_results(std::ostream& os, const std::vector<Tuple>& rows) {
  os << "l_orderkey,revenue,o_orderdate,o_shippriority\n";
  for (const auto& t : rows)
    os << fmt::format("{},{},{},{}\n", t.values.at(0), fixed(t.values.at(3), 4),
                      format_date(static_cast<std::uint32_t>(t.values.at(1))), t.values.at(2));
}

void write_q1_results(std::ostream& os, const std::vector<Tuple>& rows) {
  os << "l_returnflag,l_linestatus,sum_qty,sum_base_price,sum_disc_price,sum_charge,avg_qty,avg_price,avg_disc,"
        "count_order\n";
  for (const auto& t : rows) {
    const auto& v = t.values;
    const auto count = v.at(7);
    os << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", static_cast<char>(v.at(0)), static_cast<char>(v.at(1)),
                      v.at(2), fixed(v.at(3), 2), fixed(v.at(4), 4), fixed(v.at(5), 6), average(100 * v.at(2), count),
                      average(v.at(3), count), average(v.at(6), count), count);
  }
}

}  // namespace diba::tpch
