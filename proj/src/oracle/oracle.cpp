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

#include "diba/oracle/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <string>
#include <tuple>

#include "diba/core/date.hpp"
#include "diba/core/error.hpp"

namespace diba::oracle {

namespace {

// Column positions in the .tbl files.
namespace col {
constexpr std::size_t c_custkey = 0, c_mktsegment = 6;
constexpr std::size_t o_orderkey = 0, o_custkey = 1, o_orderdate = 4, o_shippriority = 7;
constexpr std::size_t l_orderkey = 0, l_quantity = 4, l_price = 5, l_discount = 6, l_tax = 7, l_returnflag = 8,
                      l_linestatus = 9, l_shipdate = 10;
}  // namespace col

std::uint64_t integer(const std::string& s) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError("oracle: bad integer '" + s + "'");
  return v;
}

// "123.45" -> 12345. Inputs here are never negative.
std::uint64_t cents(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos || s.size() - dot != 3) throw ParseError("oracle: bad decimal '" + s + "'");
  return integer(s.substr(0, dot)) * 100 + integer(s.substr(dot + 1));
}

std::uint64_t segment_code(const std::string& s) {
  auto seg = parse_market_segment(s);
  if (!seg) throw ParseError("oracle: bad segment '" + s + "'");
  return static_cast<std::uint64_t>(*seg);
}

// Positions inside the q3 layouts.
constexpr std::size_t kLKey = 0, kLPrice = 2, kLDisc = 3;
constexpr std::size_t kOKey = 0, kOCust = 1, kODate = 2, kOPrio = 3;
constexpr std::size_t kCKey = 0;

Tuple joined(const Tuple& l, const Tuple& o) {
  return {streams::kResult, {l.values[kLKey], o.values[kODate], o.values[kOPrio], l.values[kLPrice], l.values[kLDisc]}};
}

}  // namespace

Q3Inputs q3_selected(const tpch::Dataset& d, const Q3Params& p) {
  Q3Inputs in;
  for (const auto& r : d.lineitem.rows) {
    const auto ship = parse_date(r[col::l_shipdate]);
    if (ship > p.date)
      in.lineitem.push_back({streams::kLineitem,
                             {integer(r[col::l_orderkey]), ship, cents(r[col::l_price]), cents(r[col::l_discount])}});
  }
  for (const auto& r : d.orders.rows) {
    const auto date = parse_date(r[col::o_orderdate]);
    if (date < p.date)
      in.orders.push_back({streams::kOrders,
                           {integer(r[col::o_orderkey]), integer(r[col::o_custkey]), date,
                            integer(r[col::o_shippriority])}});
  }
  for (const auto& r : d.customer.rows) {
    const auto seg = segment_code(r[col::c_mktsegment]);
    if (seg == static_cast<std::uint64_t>(p.segment))
      in.customer.push_back({streams::kCustomer, {integer(r[col::c_custkey]), seg}});
  }
  return in;
}

std::vector<Tuple> join_q3(const Q3Inputs& in) {
  std::vector<Tuple> out;
  for (const auto& l : in.lineitem)
    for (const auto& o : in.orders) {
      if (l.values[kLKey] != o.values[kOKey]) continue;
      for (const auto& c : in.customer)
        if (c.values[kCKey] == o.values[kOCust]) out.push_back(joined(l, o));
    }
  return out;
}

std::vector<Tuple> window_join_q3(std::span<const Tuple> arrivals, std::size_t window) {
  std::deque<Tuple> ls, os, cs;
  std::vector<Tuple> out;
  auto admit = [window](std::deque<Tuple>& q, const Tuple& t) {
    q.push_back(t);
    if (q.size() > window) q.pop_front();
  };
  for (const auto& t : arrivals) {
    if (t.stream == streams::kLineitem) {
      admit(ls, t);
      for (const auto& o : os)
        for (const auto& c : cs)
          if (o.values[kOKey] == t.values[kLKey] && c.values[kCKey] == o.values[kOCust]) out.push_back(joined(t, o));
    } else if (t.stream == streams::kOrders) {
      admit(os, t);
      for (const auto& l : ls)
        for (const auto& c : cs)
          if (l.values[kLKey] == t.values[kOKey] && c.values[kCKey] == t.values[kOCust]) out.push_back(joined(l, t));
    } else if (t.stream == streams::kCustomer) {
      admit(cs, t);
      for (const auto& l : ls)
        for (const auto& o : os)
          if (l.values[kLKey] == o.values[kOKey] && t.values[kCKey] == o.values[kOCust]) out.push_back(joined(l, o));
    } else {
      throw ConfigError("oracle: unexpected stream in join arrivals");
    }
  }
  return out;
}

std::vector<Tuple> finish_q3(std::span<const Tuple> joined_rows, std::uint32_t limit) {
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> groups;
  for (const auto& j : joined_rows)
    groups[{j.values[0], j.values[1], j.values[2]}] += j.values[3] * (100 - j.values[4]);
  std::vector<Tuple> out;
  for (const auto& [k, rev] : groups)
    out.push_back({streams::kResult, {std::get<0>(k), std::get<1>(k), std::get<2>(k), rev}});
  std::sort(out.begin(), out.end(), [](const Tuple& a, const Tuple& b) {
    if (a.values[3] != b.values[3]) return a.values[3] > b.values[3];
    return a.values[0] < b.values[0];
  });
  if (limit != 0 && out.size() > limit) out.resize(limit);
  return out;
}

std::vector<Tuple> oracle_q3(const tpch::Dataset& d, const Q3Params& p) {
  return finish_q3(join_q3(q3_selected(d, p)), p.limit);
}

std::vector<Tuple> oracle_q3_windowed(std::span<const Tuple> arrivals, std::size_t window, std::uint32_t limit) {
  return finish_q3(window_join_q3(arrivals, window), limit);
}

std::vector<Tuple> oracle_q1(const tpch::Dataset& d, const Q1Params& p) {
  struct Acc {
    std::uint64_t qty = 0, base = 0, disc_price = 0, charge = 0, disc = 0, count = 0;
  };
  std::map<std::pair<char, char>, Acc> groups;
  for (const auto& r : d.lineitem.rows) {
    if (parse_date(r[col::l_shipdate]) > p.ship_cutoff) continue;
    auto& a = groups[{r[col::l_returnflag].at(0), r[col::l_linestatus].at(0)}];
    const auto price = cents(r[col::l_price]);
    const auto disc = cents(r[col::l_discount]);
    const auto tax = cents(r[col::l_tax]);
    a.qty += cents(r[col::l_quantity]) / 100;
    a.base += price;
    a.disc_price += price * (100 - disc);
    a.charge += price * (100 - disc) * (100 + tax);
    a.disc += disc;
    ++a.count;
  }
  std::vector<Tuple> out;
  for (const auto& [k, a] : groups)
    out.push_back({streams::kResult,
                   {static_cast<std::uint64_t>(k.first), static_cast<std::uint64_t>(k.second), a.qty, a.base,
                    a.disc_price, a.charge, a.disc, a.count}});
  return out;
}

}  // namespace diba::oracle
