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

#include "diba/core/tpch_schema.hpp"

#include <fmt/format.h>

#include <array>

#include "diba/core/date.hpp"
#include "diba/core/error.hpp"

namespace diba {

namespace {

constexpr std::array<std::string_view, 5> kSegmentNames = {"AUTOMOBILE", "BUILDING", "FURNITURE", "HOUSEHOLD",
                                                           "MACHINERY"};

}  // namespace

std::optional<MarketSegment> parse_market_segment(std::string_view name) {
  for (std::size_t i = 0; i < kSegmentNames.size(); ++i)
    if (kSegmentNames[i] == name) return static_cast<MarketSegment>(i);
  return std::nullopt;
}

std::string_view to_string(MarketSegment seg) { return kSegmentNames.at(static_cast<std::size_t>(seg)); }

std::uint64_t compute_revenue(std::uint64_t price_cents, std::uint64_t discount) {
  if (discount > 100) throw CodecError(fmt::format("discount {} exceeds 100 hundredths", discount));
  return price_cents * (100 - discount);
}

std::uint64_t compute_charge(std::uint64_t price_cents, std::uint64_t discount, std::uint64_t tax) {
  return compute_revenue(price_cents, discount) * (100 + tax);
}

namespace layouts {

const TupleLayout& q3_lineitem() {
  static const TupleLayout l("q3_lineitem", {{"l_orderkey", 32}, {"l_shipdate", 16}, {"l_extendedprice", 32},
                                             {"l_discount", 8}});
  return l;
}

const TupleLayout& q3_orders() {
  static const TupleLayout l("q3_orders", {{"o_orderkey", 32}, {"o_custkey", 32}, {"o_orderdate", 16},
                                           {"o_shippriority", 8}});
  return l;
}

const TupleLayout& q3_customer() {
  static const TupleLayout l("q3_customer", {{"c_custkey", 32}, {"c_mktsegment", 8}});
  return l;
}

const TupleLayout& q3_joined() {
  static const TupleLayout l("q3_joined", {{"l_orderkey", 32}, {"o_orderdate", 16}, {"o_shippriority", 8},
                                           {"l_extendedprice", 32}, {"l_discount", 8}});
  return l;
}

const TupleLayout& q3_group() {
  static const TupleLayout l("q3_group", {{"l_orderkey", 32}, {"o_orderdate", 16}, {"o_shippriority", 8},
                                          {"revenue", 64}});
  return l;
}

const TupleLayout& q1_lineitem() {
  static const TupleLayout l("q1_lineitem", {{"l_returnflag", 8}, {"l_linestatus", 8}, {"l_quantity", 8},
                                             {"l_extendedprice", 32}, {"l_discount", 8}, {"l_tax", 8},
                                             {"l_shipdate", 16}});
  return l;
}

const TupleLayout& q1_group() {
  static const TupleLayout l("q1_group", {{"l_returnflag", 8}, {"l_linestatus", 8}, {"sum_qty", 32},
                                          {"sum_base_price", 64}, {"sum_disc_price", 64}, {"sum_charge", 64},
                                          {"sum_disc", 32}, {"count_order", 32}});
  return l;
}

}  // namespace layouts

Q3Params q3_defaults() {
  Q3Params p;
  p.date = day_number(1995, 3, 15);
  return p;
}

Q1Params q1_defaults() {
  // 1998-12-01 minus 90 days.
  return Q1Params{day_number(1998, 12, 1) - 90};
}

}  // namespace diba
