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

#include <gtest/gtest.h>

#include <set>

#include "diba/core/error.hpp"
#include "diba/core/tpch_schema.hpp"
#include "diba/topology/assigner.hpp"
#include "diba/topology/instance.hpp"
#include "diba/topology/matrix.hpp"
#include "diba/topology/plan.hpp"
#include "support/routing_fuzz.hpp"

using namespace diba;
using namespace diba::topology;

namespace {

TopologyMatrix selection_grid() {
  return TopologyMatrix{2, 2, 4,
                        {{"BYPASS", "Q3_SEL1", "Q3_SEL2"}, {"BYPASS", "Q3_SEL3"}, {"BYPASS", "Q3_GROUPBY_AGG"}, {"BYPASS"}}};
}

QueryPlan one_selection(const std::string& kind = "Q3_SEL1") {
  QueryPlan p;
  p.name = "sel";
  p.sources = {{"lineitem", streams::kLineitem}};
  p.operators = {{"s", kind, {"lineitem"}, std::nullopt, {{"l_shipdate", AtomOp::kGreater, 1169}}}};
  p.output = "s";
  return p;
}

// Walks the installed tables the way a flit would and lists where stream `s`
// from the entry ends up.
void walk(const TopologyInstance& inst, std::size_t r, std::size_t c, StreamId s, std::multiset<std::string>& out) {
  const auto* e = inst.gswitch(r, c).table().find(s);
  ASSERT_NE(e, nullptr) << "G(" << r << "," << c << ")";
  if (e->dest_mask & 1) {
    if (r == inst.rows()) {
      out.insert("sink" + std::to_string(c));
    } else {
      const auto* l = inst.lswitch(r, c).table().find(s);
      ASSERT_NE(l, nullptr);
      for (std::size_t i = 0; i < inst.slot_count(r, c); ++i) {
        if (!(l->dest_mask >> i & 1)) continue;
        if (inst.slot_kind({r, c, i}) == kBypass) walk(inst, r + 1, c, s, out);
        else out.insert(inst.block_name(inst.slot_block({r, c, i})));
      }
    }
  }
  if (e->dest_mask & 2) {
    if (c + 1 == inst.cols()) out.insert("sink" + std::to_string(inst.cols() + r));
    else walk(inst, r, c + 1, s, out);
  }
}

}  // namespace

TEST(Matrix, JsonRoundTripAndValidation) {
  const auto lib = UnitLibrary::standard();
  const auto m = selection_grid();
  EXPECT_EQ(matrix_from_json(to_json(m)), m);
  EXPECT_NO_THROW(m.validate(lib));
  auto bad = m;
  bad.bricks[3] = {"Q3_SEL1"};
  EXPECT_THROW(bad.validate(lib), ConfigError);  // no BYPASS
  bad = m;
  bad.bricks[0] = {"BYPASS", "NOPE"};
  EXPECT_THROW(bad.validate(lib), ConfigError);
  bad = m;
  bad.bricks.pop_back();
  EXPECT_THROW(bad.validate(lib), ConfigError);
  bad = m;
  bad.bricks[0] = {"BYPASS", "Q3_SEL1", "Q3_SEL2", "Q3_SEL3", "Q3_SEL1"};
  EXPECT_THROW(bad.validate(lib), ConfigError);
  EXPECT_THROW(matrix_from_json(nlohmann::json{{"rows", 1}}), ConfigError);
}

TEST(Plan, JsonRoundTripAndValues) {
  const auto j = nlohmann::json::parse(R"({
    "name": "p", "sources": [{"name": "c", "stream": 4}],
    "operators": [{"id": "s", "kind": "Q3_SEL2", "inputs": ["c"],
                   "predicate": [{"field": "c_mktsegment", "op": "=", "value": "MACHINERY"}]},
                  {"id": "t", "kind": "Q3_SEL2", "inputs": ["s"], "params": {"limit": 3},
                   "predicate": [{"field": "c_custkey", "op": "<", "value": "1995-03-15"}]}],
    "output": "t"})");
  const auto p = plan_from_json(j);
  EXPECT_EQ(p.operators[0].atoms[0].value, 4u);
  EXPECT_EQ(p.operators[1].atoms[0].value, 1169u);
  EXPECT_EQ(p.operators[1].atoms[1].op, AtomOp::kSet);
  EXPECT_EQ(p.operators[1].atoms[1].value, 3u);
  EXPECT_EQ(to_json(plan_from_json(to_json(p))), to_json(p));
  auto bad = j;
  bad["operators"][1]["inputs"] = {"missing"};
  EXPECT_THROW(plan_from_json(bad), ConfigError);
  bad = j;
  bad["output"] = "c";
  EXPECT_THROW(plan_from_json(bad), ConfigError);
  bad = j;
  bad["sources"][0]["stream"] = 1;
  EXPECT_THROW(plan_from_json(bad), ConfigError);
}

TEST(Instance, BlockIdsAreBreadthFirst) {
  TopologyInstance inst(selection_grid(), UnitLibrary::standard());
  const std::vector<std::string> want{
      "G(0,0)", "L(0,0)", "G(0,1)", "S(0,0,0)", "S(0,0,1)", "S(0,0,2)", "L(0,1)", "C(0,0)", "S(0,1,0)", "S(0,1,1)",
      "G(1,0)", "C(0,1)", "L(1,0)", "G(1,1)", "S(1,0,0)", "S(1,0,1)", "L(1,1)", "C(1,0)", "S(1,1,0)", "G(2,0)",
      "C(1,1)", "G(2,1)"};
  ASSERT_EQ(inst.block_count(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(inst.block_name(BlockId{static_cast<std::uint16_t>(i)}), want[i]);
  EXPECT_EQ(inst.sink_ports(), 5u);
  EXPECT_TRUE(inst.acyclic());
  EXPECT_TRUE(inst.quiescent());
  EXPECT_EQ(inst.host({0, 0, 0}), nullptr);
  EXPECT_NE(inst.host({0, 0, 1}), nullptr);
  EXPECT_THROW(inst.slot_kind({0, 0, 3}), ConfigError);
}

TEST(Instance, WiringFollowsTheGrid) {
  TopologyInstance inst(TopologyMatrix{1, 2, 4, {{"BYPASS"}, {"BYPASS"}}}, UnitLibrary::standard());
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : inst.wiring()) edges.insert({e.from, e.to});
  const std::set<std::pair<std::string, std::string>> want{
      {"entry", "G(0,0)"},  {"G(0,0)", "L(0,0)"},   {"G(0,0)", "G(0,1)"},   {"G(0,1)", "L(0,1)"},
      {"G(0,1)", "sink[2]"}, {"L(0,0)", "S(0,0,0)"}, {"S(0,0,0)", "C(0,0)"}, {"C(0,0)", "G(1,0)"},
      {"L(0,1)", "S(0,1,0)"}, {"S(0,1,0)", "C(0,1)"}, {"C(0,1)", "G(1,1)"}, {"G(1,0)", "sink[0]"},
      {"G(1,0)", "G(1,1)"}, {"G(1,1)", "sink[1]"},  {"G(1,1)", "sink[3]"}};
  EXPECT_EQ(edges, want);
}

TEST(Assigner, SingleSelectionProgramAndTables) {
  TopologyInstance inst(TopologyMatrix{1, 1, 4, {{"BYPASS", "Q3_SEL1"}}}, UnitLibrary::standard());
  const auto prog = assign_query(one_selection(), inst);
  // Lineitem and END from the entry into slot 1; survivors and END out to sink 0.
  const std::vector<std::string> want{"A:0:2:01:2", "A:0:5:01:1", "L:1:2:0010:0", "L:1:5:0010:0",
                                      "A:5:2:01:2", "A:5:5:01:1", "P:3:1>1169:0set1"};
  EXPECT_EQ(prog.dump(), want);
  deploy(inst, prog);
  ASSERT_EQ(inst.deployments().size(), 1u);
  EXPECT_EQ(inst.host({0, 0, 1})->end_count(), 1u);
  std::multiset<std::string> reach;
  walk(inst, 0, 0, streams::kLineitem, reach);
  EXPECT_EQ(reach, std::multiset<std::string>{"S(0,0,1)"});
}

TEST(Assigner, MulticastAndFanIn) {
  // Two selections read the same source; a second query later shares the trunk.
  TopologyInstance inst(selection_grid(), UnitLibrary::standard());
  QueryPlan p;
  p.name = "two";
  p.sources = {{"l", streams::kLineitem}};
  p.operators = {{"a", "Q3_SEL1", {"l"}, std::nullopt, {}}};
  p.output = "a";
  deploy(inst, assign_query(p, inst));
  std::multiset<std::string> reach;
  walk(inst, 0, 0, streams::kLineitem, reach);
  EXPECT_EQ(reach.size(), 1u);

  QueryPlan q;
  q.name = "orders";
  q.sources = {{"o", streams::kOrders}};
  q.operators = {{"b", "Q3_SEL3", {"o"}, std::nullopt, {{"o_orderdate", AtomOp::kLess, 10}}}};
  q.output = "b";
  const auto prog = assign_query(q, inst);
  deploy(inst, prog);
  // The END trunk from the entry now reaches both selections exactly once.
  std::multiset<std::string> ends;
  walk(inst, 0, 0, streams::kEnd, ends);
  EXPECT_EQ(ends, (std::multiset<std::string>{"S(0,0,1)", "S(0,1,1)"}));
  EXPECT_EQ(inst.host({0, 0, 1})->end_count(), 1u);
  EXPECT_EQ(inst.host({0, 1, 1})->end_count(), 1u);
}

TEST(Assigner, FailuresAreReported) {
  TopologyInstance inst(TopologyMatrix{1, 1, 4, {{"BYPASS", "Q3_SEL1"}}}, UnitLibrary::standard());
  EXPECT_THROW(assign_query(one_selection("Q3_SEL3"), inst), PlacementError);
  auto p = one_selection();
  p.operators[0].atoms.push_back({"nope", AtomOp::kEqual, 1});
  EXPECT_THROW(assign_query(p, inst), ConfigError);
  p = one_selection();
  p.operators[0].atoms.push_back({"depth", AtomOp::kSet, 1});
  EXPECT_THROW(assign_query(p, inst), ConfigError);
  p = one_selection();
  p.sources[0].stream = streams::kOrders;  // SEL1 does not take orders
  EXPECT_THROW(assign_query(p, inst), ConfigError);
  deploy(inst, assign_query(one_selection(), inst));
  EXPECT_THROW(assign_query(one_selection(), inst), PlacementError);  // slot already taken
}

TEST(Assigner, ConsumerMustBeDownstream) {
  // Both selections share a brick, so the second can never receive the first's output.
  TopologyMatrix m{1, 1, 4, {{"BYPASS", "Q3_SEL1", "Q3_SEL1"}}};
  TopologyInstance inst(m, UnitLibrary::standard());
  QueryPlan p = one_selection();
  p.operators.push_back({"g", "Q3_SEL1", {"s"}, std::nullopt, {}});
  p.output = "g";
  EXPECT_THROW(assign_query(p, inst), PlacementError);
}

TEST(RoutingFuzz, RandomGridsDeliverExactlyOnceInOrder) {
  std::size_t tuples = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto r = diba::testing::run_routing_fuzz(seed);
    ASSERT_TRUE(r.ok) << r.failure;
    tuples += r.tuples;
  }
  EXPECT_GT(tuples, 10000u);
}
