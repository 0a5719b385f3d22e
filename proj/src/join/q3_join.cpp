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

#include "diba/join/q3_join.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"
#include "diba/core/tpch_schema.hpp"

namespace diba::join {

namespace {

// Field positions in the Q3 layouts.
constexpr std::size_t kLOrderkey = 0, kLPrice = 2, kLDiscount = 3;
constexpr std::size_t kOOrderkey = 0, kOCustkey = 1, kODate = 2, kOPriority = 3;
constexpr std::size_t kCCustkey = 0;

const TupleLayout* q3_input(StreamId s) {
  if (s == streams::kLineitem) return &layouts::q3_lineitem();
  if (s == streams::kOrders) return &layouts::q3_orders();
  if (s == streams::kCustomer) return &layouts::q3_customer();
  return nullptr;
}

}  // namespace

Tuple make_q3_joined(const Tuple& l, const Tuple& o) {
  return Tuple{streams::kResult,
               {l.values[kLOrderkey], o.values[kODate], o.values[kOPriority], l.values[kLPrice], l.values[kLDiscount]}};
}

std::vector<std::string> q3_index_names() { return {"lorderkey", "oorderkey", "ccust", "ocust"}; }

Q3Join::Q3Join(const HbsjConfig& cfg)
    : lineitem_(cfg, {kLOrderkey}), orders_(cfg, {kOOrderkey, kOCustkey}), customer_(cfg, {kCCustkey}) {}

void Q3Join::clear() {
  lineitem_.clear();
  orders_.clear();
  customer_.clear();
}

std::array<std::size_t, 4> Q3Join::overflow_occupancy() const {
  return {lineitem_.overflow_occupancy(0), orders_.overflow_occupancy(0), customer_.overflow_occupancy(0),
          orders_.overflow_occupancy(1)};
}

Q3Join::StepResult Q3Join::step(const Tuple& t, const CostModel& cost) {
  StepResult r;
  auto probe = [&](const JoinWindow& w, std::size_t idx, std::uint64_t key) {
    std::size_t scanned = 0;
    auto m = w.probe(idx, key, &scanned);
    r.cycles += cost.hash_probe + scanned * cost.overflow_scan;
    return m;
  };
  auto insert = [&](JoinWindow& w) {
    const auto ins = w.insert(t);
    r.cycles += cost.insert + (ins.expired ? cost.expire : 0);
  };

  if (t.stream == streams::kLineitem) {
    insert(lineitem_);
    for (const Tuple* o : probe(orders_, 0, t.values[kLOrderkey]))
      for (std::size_t n = probe(customer_, 0, o->values[kOCustkey]).size(); n > 0; --n)
        r.joined.push_back(make_q3_joined(t, *o));
  } else if (t.stream == streams::kOrders) {
    insert(orders_);
    const auto cs = probe(customer_, 0, t.values[kOCustkey]);
    for (std::size_t n = cs.size(); n > 0; --n)
      for (const Tuple* l : probe(lineitem_, 0, t.values[kOOrderkey])) r.joined.push_back(make_q3_joined(*l, t));
  } else if (t.stream == streams::kCustomer) {
    insert(customer_);
    for (const Tuple* o : probe(orders_, 1, t.values[kCCustkey]))
      for (const Tuple* l : probe(lineitem_, 0, o->values[kOOrderkey])) r.joined.push_back(make_q3_joined(*l, *o));
  } else {
    throw SimulationFault(fmt::format("Q3 join received stream {}", t.stream.value));
  }
  return r;
}

Q3JoinUnit::Q3JoinUnit(const HbsjConfig& cfg) : join_(cfg) {}

const TupleLayout* Q3JoinUnit::input_layout(StreamId s) const { return q3_input(s); }
const TupleLayout& Q3JoinUnit::output_layout() const { return layouts::q3_joined(); }
void Q3JoinUnit::configure(std::span<const Atom> /*atoms*/) {}

Cycles Q3JoinUnit::process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) {
  if (in.stream == streams::kEnd) {
    join_.clear();
    out.push_back(in);
    return cost.pass_through;
  }
  auto r = join_.step(in, cost);
  out.insert(out.end(), std::make_move_iterator(r.joined.begin()), std::make_move_iterator(r.joined.end()));
  return r.cycles;
}

void Q3JoinUnit::overflow_occupancy(std::vector<std::size_t>& out) const {
  const auto o = join_.overflow_occupancy();
  out.assign(o.begin(), o.end());
}

std::vector<StageSpec> q3_direct_stages() {
  return {
      StageSpec{"lineitem.l_orderkey", streams::kLineitem, kLOrderkey, {{streams::kOrders, kOOrderkey}}},
      StageSpec{"orders.o_orderkey", streams::kOrders, kOOrderkey, {{streams::kLineitem, kLOrderkey}}},
      StageSpec{"orders.o_custkey", streams::kOrders, kOCustkey, {{streams::kCustomer, kCCustkey}}},
      StageSpec{"customer.c_custkey", streams::kCustomer, kCCustkey, {{streams::kOrders, kOCustkey}}},
  };
}

Q3DirectJoinUnit::Q3DirectJoinUnit(const HbsjConfig& cfg) : join_(q3_direct_stages(), cfg) {}

const TupleLayout* Q3DirectJoinUnit::input_layout(StreamId s) const { return q3_input(s); }
const TupleLayout& Q3DirectJoinUnit::output_layout() const { return layouts::q3_joined(); }
void Q3DirectJoinUnit::configure(std::span<const Atom> /*atoms*/) {}

Cycles Q3DirectJoinUnit::process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) {
  if (in.stream == streams::kEnd) {
    join_.clear();
    out.push_back(in);
    return cost.pass_through;
  }
  auto r = join_.step(in, cost);
  for (const auto& c : r.outputs)
    out.push_back(make_q3_joined(*c[streams::kLineitem.value], *c[streams::kOrders.value]));
  return r.cycles;
}

void Q3DirectJoinUnit::overflow_occupancy(std::vector<std::size_t>& out) const {
  // Stage order is L, O.orderkey, O.custkey, C; report as lorderkey, oorderkey, ccust, ocust.
  out = {join_.overflow_occupancy(0), join_.overflow_occupancy(1), join_.overflow_occupancy(3),
         join_.overflow_occupancy(2)};
}

}  // namespace diba::join
