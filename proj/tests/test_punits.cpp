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

#include <algorithm>
#include <map>
#include <random>

#include "diba/core/error.hpp"
#include "diba/core/tpch_schema.hpp"
#include "diba/punits/group_aggregator.hpp"
#include "diba/punits/predicate.hpp"
#include "diba/punits/synchronizer.hpp"
#include "diba/punits/top_k.hpp"
#include "diba/punits/units.hpp"

using namespace diba;
using namespace diba::punits;

namespace {

Tuple row(std::vector<std::uint64_t> v) { return {streams::kResult, std::move(v)}; }

}  // namespace

TEST(Selection, ConjunctionOfAtoms) {
  const Predicate p{{{0, AtomOp::kGreater, 10}, {1, AtomOp::kNotEqual, 3}}};
  EXPECT_TRUE(p.matches(row({11, 2})));
  EXPECT_FALSE(p.matches(row({10, 2})));
  EXPECT_FALSE(p.matches(row({11, 3})));
  EXPECT_TRUE(Predicate{}.matches(row({0})));
  EXPECT_TRUE(selection_process(make_end(), p).has_value());
}

TEST(Selection, UnitMatchesBruteForce) {
  SelectionUnit u("SEL", streams::kLineitem, layouts::q3_lineitem());
  const std::vector<Atom> atoms{{1, AtomOp::kGreater, 1169}, {3, AtomOp::kLessEqual, 5}, {0, AtomOp::kSet, 1}};
  u.configure(atoms);
  EXPECT_EQ(u.predicate().atoms.size(), 2u);
  std::mt19937_64 rng(11);
  CostModel cost;
  for (int i = 0; i < 1000; ++i) {
    const Tuple t{streams::kLineitem, {rng() % 100, rng() % 2500, rng() % 100000, rng() % 11}};
    std::vector<Tuple> out;
    EXPECT_EQ(u.process(t, out, cost), cost.selection);
    const bool keep = t.values[1] > 1169 && t.values[3] <= 5;
    ASSERT_EQ(out.size(), keep ? 1u : 0u);
  }
  EXPECT_THROW(u.configure(std::vector<Atom>{{9, AtomOp::kEqual, 0}}), SimulationFault);
}

TEST(GroupAggregator, SumsPerGroupInFirstSeenOrder) {
  GroupAggregator g({{0}, {{AggFn::kSum, {1}}, {AggFn::kCount, {}}, {AggFn::kRevenue, {1, 2}}}});
  std::mt19937_64 rng(5);
  std::map<std::uint64_t, std::array<std::uint64_t, 3>> want;
  std::vector<std::uint64_t> order;
  for (int i = 0; i < 500; ++i) {
    const auto k = rng() % 17, p = rng() % 10000, d = rng() % 11;
    if (!want.count(k)) order.push_back(k);
    auto& w = want[k];
    w[0] += p, w[1] += 1, w[2] += p * (100 - d);
    EXPECT_TRUE(g.step(row({k, p, d})).empty());
  }
  const auto out = g.step(make_end());
  ASSERT_EQ(out.size(), order.size() + 1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& w = want[order[i]];
    EXPECT_EQ(out[i].values, (std::vector<std::uint64_t>{order[i], w[0], w[1], w[2]}));
  }
  EXPECT_EQ(out.back(), make_end());
  EXPECT_EQ(g.groups(), 0u);  // state cleared for the next run
}

TEST(GroupAggregator, ChargeAndCapacity) {
  GroupAggregator g({{}, {{AggFn::kCharge, {0, 1, 2}}}, streams::kResult, 1});
  g.step(row({1000, 5, 8}));
  g.step(row({2000, 0, 0}));
  EXPECT_EQ(g.step(make_end())[0].values[0], 1000u * 95 * 108 + 2000u * 100 * 100);
  GroupAggregator small({{0}, {{AggFn::kCount, {}}}, streams::kResult, 2});
  small.step(row({1}));
  small.step(row({2}));
  EXPECT_THROW(small.step(row({3})), SimulationFault);
  EXPECT_THROW(GroupAggregator({{0}, {{AggFn::kSum, {}}}}), ConfigError);
}

TEST(TopK, EqualsSortThenTruncate) {
  std::mt19937_64 rng(9);
  for (std::size_t limit : {0u, 1u, 3u, 10u, 50u}) {
    TopK k({{1, true}, {0, false}}, limit);
    std::vector<Tuple> all;
    for (int i = 0; i < 200; ++i) {
      all.push_back(row({static_cast<std::uint64_t>(i), rng() % 30}));
      EXPECT_TRUE(k.step(all.back()).empty());
    }
    std::stable_sort(all.begin(), all.end(), [](const Tuple& a, const Tuple& b) {
      return a.values[1] != b.values[1] ? a.values[1] > b.values[1] : a.values[0] < b.values[0];
    });
    if (limit != 0) all.resize(limit);
    auto out = k.step(make_end());
    ASSERT_EQ(out.back(), make_end());
    out.pop_back();
    EXPECT_EQ(out, all) << "limit " << limit;
  }
}

TEST(TopK, ComparisonCountIsInsertionDepth) {
  TopK k({{0, false}}, 0);
  std::uint64_t c = 0;
  k.step(row({5}), &c);
  EXPECT_EQ(c, 0u);
  k.step(row({7}), &c);  // one look at the tail
  EXPECT_EQ(c, 1u);
  c = 0;
  k.step(row({1}), &c);  // walks past both
  EXPECT_EQ(c, 2u);
}

TEST(OrderByUnit, LimitFromConfiguration) {
  OrderByUnit u("TOP", streams::kResult, layouts::q3_group(), {{3, true}, {0, false}}, 10);
  u.configure(std::vector<Atom>{{params::kLimit, AtomOp::kSet, 2}});
  CostModel cost;
  std::vector<Tuple> out;
  for (std::uint64_t i = 0; i < 5; ++i) u.process(row({i, 0, 0, i * 10}), out, cost);
  u.process(make_end(), out, cost);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].values[0], 4u);
  EXPECT_EQ(out[1].values[0], 3u);
}

TEST(Synchronizer, MergesSortedInputsAndWaitsForOpenPorts) {
  Synchronizer s(2, 0);
  s.push(0, row({1}));
  EXPECT_FALSE(s.pop().has_value());  // port 1 could still deliver a smaller key
  s.push(1, row({0}));
  EXPECT_EQ(s.pop()->values[0], 0u);
  std::vector<Tuple> a{row({2}), row({4}), row({9})}, b{row({3}), row({4}), row({5})};
  const auto merged = sync_merge(a, b, 0);
  std::vector<std::uint64_t> keys;
  for (const auto& t : merged) keys.push_back(t.values[0]);
  EXPECT_EQ(keys, (std::vector<std::uint64_t>{2, 3, 4, 4, 5, 9}));
  Synchronizer closed(1, 0);
  closed.push(0, make_end());
  EXPECT_TRUE(closed.done());
  EXPECT_THROW(closed.push(0, row({1})), SimulationFault);
}

TEST(CaptureUnit, LogsAndStalls) {
  auto log = std::make_shared<CaptureUnit::Log>();
  CaptureUnit u({{streams::kLineitem, layouts::q3_lineitem()}}, log, 3, 1);
  CostModel cost;
  std::vector<Tuple> out;
  for (int i = 0; i < 50; ++i) {
    const auto c = u.process({streams::kLineitem, {1, 2, 3, 4}}, out, cost);
    EXPECT_GE(c, 1u);
    EXPECT_LE(c, 4u);
  }
  EXPECT_EQ(log->size(), 50u);
  EXPECT_TRUE(out.empty());
  EXPECT_EQ(u.input_layout(streams::kOrders), nullptr);
}
