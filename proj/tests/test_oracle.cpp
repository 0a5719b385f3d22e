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

#include <sstream>

#include "json.hpp"

#include "diba/core/date.hpp"
#include "diba/oracle/oracle.hpp"
#include "diba/tpch/tbl.hpp"
#include "support/session.hpp"

using namespace diba;
using diba::testing::micro_dir;
using diba::testing::q1_csv;
using diba::testing::q3_csv;
using diba::testing::slurp;

namespace {

tpch::Table table(tpch::TableKind k, const std::string& text) {
  std::istringstream in(text);
  return tpch::parse_tbl(in, k);
}

// Two customers, three orders, five lines; small enough to work out by hand.
tpch::Dataset tiny() {
  tpch::Dataset d;
  d.customer = table(tpch::TableKind::kCustomer,
                     "1|C1|a|0|p|1.00|BUILDING|c|\n"
                     "2|C2|a|0|p|1.00|MACHINERY|c|\n");
  d.orders = table(tpch::TableKind::kOrders,
                   "10|1|O|1.00|1995-03-10|p|c|0|c|\n"
                   "11|1|O|1.00|1995-03-15|p|c|1|c|\n"  // not before the date
                   "12|2|O|1.00|1995-01-01|p|c|0|c|\n"  // wrong segment
                   "13|1|O|1.00|1994-12-31|p|c|2|c|\n");
  d.lineitem = table(tpch::TableKind::kLineitem,
                     "10|1|1|1|1.00|100.00|0.10|0.00|N|O|1995-03-16|1995-03-20|1995-03-21|i|m|c|\n"
                     "10|1|1|2|1.00|50.00|0.00|0.00|N|O|1995-03-15|1995-03-20|1995-03-21|i|m|c|\n"
                     "11|1|1|1|1.00|999.00|0.00|0.00|N|O|1995-04-01|1995-03-20|1995-04-21|i|m|c|\n"
                     "12|1|1|1|1.00|999.00|0.00|0.00|N|O|1995-04-01|1995-03-20|1995-04-21|i|m|c|\n"
                     "13|1|1|1|2.00|90.00|0.00|0.04|N|O|1995-05-01|1995-03-20|1995-05-21|i|m|c|\n"
                     "13|1|1|2|3.00|10.01|0.05|0.02|A|F|1995-03-17|1995-03-20|1995-04-21|i|m|c|\n");
  return d;
}

}  // namespace

TEST(OracleQ3, HandWorked) {
  // Order 10: 100.00 * 0.90 = 90.0000; order 13: 90.00 + 10.01 * 0.95 = 99.5095.
  EXPECT_EQ(q3_csv(oracle::oracle_q3(tiny())),
            "l_orderkey,revenue,o_orderdate,o_shippriority\n"
            "13,99.5095,1994-12-31,2\n"
            "10,90.0000,1995-03-10,0\n");
  Q3Params p = q3_defaults();
  p.limit = 1;
  EXPECT_EQ(q3_csv(oracle::oracle_q3(tiny(), p)),
            "l_orderkey,revenue,o_orderdate,o_shippriority\n13,99.5095,1994-12-31,2\n");
  p.limit = 10;
  p.segment = MarketSegment::kMachinery;
  p.date = parse_date("1995-02-01");
  EXPECT_EQ(q3_csv(oracle::oracle_q3(tiny(), p)),
            "l_orderkey,revenue,o_orderdate,o_shippriority\n12,999.0000,1995-01-01,0\n");
}

TEST(OracleQ3, SelectionKeepsTableOrder) {
  const auto sel = oracle::q3_selected(tiny(), q3_defaults());
  ASSERT_EQ(sel.lineitem.size(), 5u);  // 1995-03-15 itself fails l_shipdate > date
  ASSERT_EQ(sel.orders.size(), 3u);
  ASSERT_EQ(sel.customer.size(), 1u);
  EXPECT_EQ(sel.orders[0].values[0], 10u);
  EXPECT_EQ(sel.orders[2].values[0], 13u);
}

TEST(OracleQ3, TiesBreakOnOrderKey) {
  const auto& L = layouts::q3_joined();
  std::vector<Tuple> joined;
  for (std::uint64_t key : {9, 4, 7}) {
    Tuple t{StreamId{6}, std::vector<std::uint64_t>(L.field_count(), 0)};
    t.values[L.require("l_orderkey")] = key;
    t.values[L.require("l_extendedprice")] = 100;
    joined.push_back(t);
  }
  const auto out = oracle::finish_q3(joined, 0);
  ASSERT_EQ(out.size(), 3u);
  const auto k = layouts::q3_group().require("l_orderkey");
  EXPECT_EQ(out[0].values[k], 4u);
  EXPECT_EQ(out[1].values[k], 7u);
  EXPECT_EQ(out[2].values[k], 9u);
  EXPECT_EQ(oracle::finish_q3(joined, 2).size(), 2u);
}

TEST(OracleQ3, WindowForgetsOldTuples) {
  const auto sel = oracle::q3_selected(tiny(), q3_defaults());
  // Customer, then order 10, then an unrelated order pushes 10 out of a window of one.
  std::vector<Tuple> arrivals{sel.customer[0], sel.orders[0], sel.lineitem[0], sel.orders[2], sel.lineitem[3]};
  EXPECT_EQ(oracle::window_join_q3(arrivals, 8).size(), 2u);
  EXPECT_EQ(oracle::window_join_q3(arrivals, 1).size(), 2u);  // each line meets its order while it is current
  std::vector<Tuple> late{sel.customer[0], sel.orders[0], sel.orders[2], sel.lineitem[0]};
  EXPECT_EQ(oracle::window_join_q3(late, 2).size(), 1u);
  EXPECT_EQ(oracle::window_join_q3(late, 1).size(), 0u);
  // Arrival order does not matter when nothing expires.
  std::vector<Tuple> all;
  for (const auto& t : sel.lineitem) all.push_back(t);
  for (const auto& t : sel.orders) all.push_back(t);
  for (const auto& t : sel.customer) all.push_back(t);
  EXPECT_EQ(q3_csv(oracle::oracle_q3_windowed(all, 100)), q3_csv(oracle::oracle_q3(tiny())));
}

TEST(OracleQ1, HandWorked) {
  Q1Params p;
  p.ship_cutoff = parse_date("1995-04-01");
  // A,F: one line. N,O: the four lines shipped on or before 04-01; avg_disc 0.025 rounds up.
  EXPECT_EQ(q1_csv(oracle::oracle_q1(tiny(), p)),
            "l_returnflag,l_linestatus,sum_qty,sum_base_price,sum_disc_price,sum_charge,avg_qty,avg_price,"
            "avg_disc,count_order\n"
            "A,F,3,10.01,9.5095,9.699690,3.00,10.01,0.05,1\n"
            "N,O,4,2148.00,2138.0000,2138.000000,1.00,537.00,0.03,4\n");
}

TEST(Oracle, MatchesSqliteOnMicro) {
  const auto d = tpch::load_dataset(micro_dir());
  const auto j = nlohmann::json::parse(slurp(micro_dir() + "/variants.json"));
  ASSERT_GE(j.size(), 4u);
  for (const auto& v : j) {
    const std::string tag = v.at("tag");
    const std::string suffix = tag.empty() ? "" : "_" + tag;
    Q3Params p;
    p.segment = *parse_market_segment(v.at("segment").get<std::string>());
    p.date = parse_date(v.at("date").get<std::string>());
    p.limit = v.at("limit");
    Q1Params q;
    q.ship_cutoff = day_number(1998, 12, 1) - v.at("q1_delta").get<std::uint32_t>();
    EXPECT_EQ(q3_csv(oracle::oracle_q3(d, p)), slurp(micro_dir() + "/q3_golden" + suffix + ".csv")) << tag;
    EXPECT_EQ(q1_csv(oracle::oracle_q1(d, q)), slurp(micro_dir() + "/q1_golden" + suffix + ".csv")) << tag;
  }
}
