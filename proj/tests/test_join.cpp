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
#include <deque>
#include <random>
#include <string_view>

#include "diba/core/error.hpp"
#include "diba/core/tpch_schema.hpp"
#include "diba/join/circular_join.hpp"
#include "diba/join/hbsj.hpp"
#include "diba/join/murmur3.hpp"
#include "diba/join/q3_join.hpp"
#include "diba/oracle/oracle.hpp"

using namespace diba;
using namespace diba::join;

namespace {

std::uint32_t mm(std::string_view s, std::uint32_t seed) {
  return murmur3_32({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()}, seed);
}

HbsjConfig config(std::size_t w, std::size_t ht) {
  HbsjConfig c;
  c.window = w;
  c.hash_rows = ht;
  c.overflow_capacity = w;
  return c;
}

std::vector<Tuple> sorted(std::vector<Tuple> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Random selected Q3 arrivals with keys drawn from small domains so the
// windows both match and expire.
std::vector<Tuple> random_arrivals(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Tuple> out;
  for (std::size_t i = 0; i < n; ++i) {
    switch (rng() % 3) {
      case 0: out.push_back({streams::kLineitem, {rng() % 60, 1200, 1000 + rng() % 9000, rng() % 11}}); break;
      case 1: out.push_back({streams::kOrders, {rng() % 60, rng() % 20, 1000 + rng() % 100, rng() % 2}}); break;
      default: out.push_back({streams::kCustomer, {rng() % 20, 1}}); break;
    }
  }
  return out;
}

template <class Unit>
std::vector<Tuple> feed(Unit& u, const std::vector<Tuple>& arrivals) {
  CostModel cost;
  std::vector<Tuple> out;
  for (const auto& t : arrivals) u.process(t, out, cost);
  return out;
}

}  // namespace

TEST(Murmur3, ReferenceVectors) {
  EXPECT_EQ(mm("", 0), 0u);
  EXPECT_EQ(mm("", 1), 0x514E28B7u);
  EXPECT_EQ(mm("", 0xFFFFFFFFu), 0x81F16F39u);
  EXPECT_EQ(mm(std::string_view("\0\0\0\0", 4), 0), 0x2362F9DEu);
  EXPECT_EQ(mm("aaaa", 0x9747B28Cu), 0x5A97808Au);
  EXPECT_EQ(mm("Hello, world!", 0x9747B28Cu), 0x24884CBAu);
  EXPECT_EQ(mm("The quick brown fox jumps over the lazy dog", 0x9747B28Cu), 0x2FA826CDu);
}

TEST(Murmur3, KeyWidths) {
  EXPECT_EQ(hash_key(0, 0), 0x2362F9DEu);
  const std::uint8_t le4[] = {0x78, 0x56, 0x34, 0x12};
  EXPECT_EQ(hash_key(0x12345678, kSeed1), murmur3_32(le4, kSeed1));
  const std::uint8_t le8[] = {1, 0, 0, 0, 1, 0, 0, 0};
  EXPECT_EQ(hash_key(0x100000001ull, kSeed2), murmur3_32(le8, kSeed2));
}

TEST(HbsjConfig, Validation) {
  EXPECT_NO_THROW(config(8, 32).validate());
  EXPECT_THROW(config(8, 48).validate(), ConfigError);
  auto c = config(8, 32);
  c.overflow_capacity = 7;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(HashIndex, CollisionsSpillToOverflowAndSlotsAreReused) {
  HashIndex idx(config(16, 1));  // one row per table: four cells, then overflow
  for (std::uint32_t h = 0; h < 6; ++h) {
    const auto loc = idx.insert(100 + h, h);
    EXPECT_EQ(loc.table, h < 4 ? h : Location::kOverflow);
  }
  EXPECT_EQ(idx.overflow_occupancy(), 2u);
  idx.erase({Location::kOverflow, 0});
  EXPECT_EQ(idx.overflow_occupancy(), 1u);
  EXPECT_EQ(idx.insert(200, 9), (Location{Location::kOverflow, 0}));
  std::vector<std::uint32_t> seen;
  EXPECT_EQ(idx.probe(200, [&](std::uint32_t h) { seen.push_back(h); }), 2u);
  EXPECT_EQ(seen, std::vector<std::uint32_t>{9});
  EXPECT_THROW(idx.erase({0, 5}), std::out_of_range);
}

// Random inserts and probes against a plain deque scanned in full.
TEST(JoinWindow, MatchesNestedLoopOracleForEveryTableSize) {
  const std::size_t w = 64;
  std::vector<std::vector<std::vector<Tuple>>> per_ht;
  for (std::size_t ht : {1u, 4u, 32u, 256u, 2048u}) {
    JoinWindow win(config(w, ht), {0});
    std::deque<Tuple> ref;
    std::mt19937_64 rng(0x5EED);
    std::vector<std::vector<Tuple>> results;
    for (int op = 0; op < 20000; ++op) {
      const std::uint64_t key = rng() % 97;
      if (rng() % 2) {
        const Tuple t{streams::kOrders, {key, static_cast<std::uint64_t>(op)}};
        const auto r = win.insert(t);
        ref.push_back(t);
        if (ref.size() > w) {
          ASSERT_TRUE(r.expired.has_value());
          EXPECT_EQ(*r.expired, ref.front());
          ref.pop_front();
        } else {
          ASSERT_FALSE(r.expired.has_value());
        }
      } else {
        std::vector<Tuple> got, want;
        for (const Tuple* p : win.probe(0, key)) got.push_back(*p);
        for (const auto& t : ref)
          if (t.values[0] == key) want.push_back(t);
        ASSERT_EQ(sorted(got), sorted(want)) << "ht " << ht << " op " << op;
        results.push_back(sorted(got));
      }
    }
    EXPECT_EQ(win.contents(), std::vector<Tuple>(ref.begin(), ref.end()));
    per_ht.push_back(std::move(results));
  }
  for (std::size_t i = 1; i < per_ht.size(); ++i) EXPECT_EQ(per_ht[i], per_ht[0]);
}

TEST(JoinWindow, OverflowShrinksAsTablesGrow) {
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> keys(512);
  for (auto& k : keys) k = rng() % 100000;
  std::size_t prev = SIZE_MAX;
  for (std::size_t ht : {8u, 64u, 512u, 4096u}) {
    JoinWindow win(config(512, ht), {0});
    for (auto k : keys) win.insert({streams::kOrders, {k, 0}});
    EXPECT_LE(win.overflow_occupancy(0), prev);
    prev = win.overflow_occupancy(0);
  }
  EXPECT_LT(prev, 8u);
}

TEST(Q3Join, MatchesWindowOracle) {
  for (std::size_t w : {4u, 16u, 1024u}) {
    const auto arrivals = random_arrivals(3000, w);
    Q3JoinUnit unit(config(w, 32));
    EXPECT_EQ(sorted(feed(unit, arrivals)), sorted(oracle::window_join_q3(arrivals, w))) << "w " << w;
  }
}

TEST(Q3Join, DirectAndOptimizedAgree) {
  for (std::size_t ht : {1u, 32u, 2048u}) {
    const auto arrivals = random_arrivals(3000, ht + 7);
    Q3JoinUnit opt(config(32, ht));
    Q3DirectJoinUnit direct(config(32, ht));
    const auto a = sorted(feed(opt, arrivals));
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, sorted(feed(direct, arrivals))) << "ht " << ht;
  }
}

TEST(Q3Join, EndClearsStateAndIsForwarded) {
  Q3JoinUnit unit(config(16, 32));
  CostModel cost;
  std::vector<Tuple> out;
  unit.process({streams::kCustomer, {1, 1}}, out, cost);
  unit.process({streams::kOrders, {7, 1, 10, 0}}, out, cost);
  unit.process(make_end(), out, cost);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], make_end());
  out.clear();
  unit.process({streams::kLineitem, {7, 1200, 500, 1}}, out, cost);
  EXPECT_TRUE(out.empty());
  EXPECT_EQ(unit.join().orders().size(), 0u);
}

TEST(Q3Join, OverflowCostIsCharged) {
  CostModel cost;
  Q3Join small(config(64, 1)), big(config(64, 2048));
  Cycles cs = 0, cb = 0;
  for (std::uint64_t i = 0; i < 64; ++i) {
    const Tuple o{streams::kOrders, {i, i, 0, 0}};
    small.step(o, cost);
    big.step(o, cost);
  }
  // Lineitem probes of the orders index walk the overflow buffer only when it is in use.
  for (std::uint64_t i = 0; i < 64; ++i) {
    const Tuple l{streams::kLineitem, {i, 1200, 100, 0}};
    cs += small.step(l, cost).cycles;
    cb += big.step(l, cost).cycles;
  }
  EXPECT_GT(cs, cb);
  EXPECT_EQ(small.overflow_occupancy()[1], 60u);  // 64 orders, four table cells
  EXPECT_EQ(small.overflow_occupancy()[3], 60u);
}

TEST(CircularJoin, DefersUnboundStagesAndPassesThrough) {
  // Customer is indexed twice; a lineitem arrival must skip the orders and
  // customer-by-field-1 stages until a customer joins in.
  const std::vector<StageSpec> stages{
      {"l", streams::kLineitem, 0, {{streams::kCustomer, 0}}},
      {"o", streams::kOrders, 0, {{streams::kCustomer, 1}}},
      {"c1", streams::kCustomer, 1, {{streams::kOrders, 0}}},
      {"c0", streams::kCustomer, 0, {{streams::kLineitem, 0}}},
  };
  CircularJoin j(stages, config(8, 32));
  CostModel cost;
  j.step({streams::kOrders, {9}}, cost);
  j.step({streams::kCustomer, {5, 9}}, cost);
  const auto r = j.step({streams::kLineitem, {5}}, cost);
  ASSERT_EQ(r.outputs.size(), 1u);
  EXPECT_EQ(r.outputs[0][streams::kOrders.value]->values[0], 9u);
  EXPECT_EQ(r.outputs[0][streams::kCustomer.value]->values[1], 9u);
  EXPECT_TRUE(j.step({streams::kLineitem, {6}}, cost).outputs.empty());
  EXPECT_THROW(j.step({streams::kResult, {1}}, cost), SimulationFault);
  EXPECT_THROW(CircularJoin({stages[0]}, config(8, 32)), ConfigError);
}

TEST(CircularJoin, UnreachableStageIsAConfigurationError) {
  const std::vector<StageSpec> stages{
      {"l", streams::kLineitem, 0, {{streams::kCustomer, 0}}},
      {"o", streams::kOrders, 0, {{streams::kCustomer, 1}}},
      {"c", streams::kCustomer, 0, {{streams::kLineitem, 0}}},
  };
  CircularJoin j(stages, config(8, 32));
  CostModel cost;
  EXPECT_THROW(j.step({streams::kOrders, {9}}, cost), ConfigError);
}
