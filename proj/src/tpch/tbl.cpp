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

#include "diba/tpch/tbl.hpp"

#include <fmt/format.h>

#include <array>
#include <charconv>
#include <fstream>

#include "diba/core/date.hpp"
#include "diba/core/error.hpp"
#include "diba/core/tpch_schema.hpp"

namespace diba::tpch {

namespace {

using T = ColumnType;

constexpr std::array<Column, 8> kCustomer{{
    {"c_custkey", T::kInteger}, {"c_name", T::kText}, {"c_address", T::kText}, {"c_nationkey", T::kInteger},
    {"c_phone", T::kText}, {"c_acctbal", T::kDecimal}, {"c_mktsegment", T::kSegment}, {"c_comment", T::kText},
}};

constexpr std::array<Column, 9> kOrders{{
    {"o_orderkey", T::kInteger}, {"o_custkey", T::kInteger}, {"o_orderstatus", T::kFlag},
    {"o_totalprice", T::kDecimal}, {"o_orderdate", T::kDate}, {"o_orderpriority", T::kText},
    {"o_clerk", T::kText}, {"o_shippriority", T::kInteger}, {"o_comment", T::kText},
}};

constexpr std::array<Column, 16> kLineitem{{
    {"l_orderkey", T::kInteger}, {"l_partkey", T::kInteger}, {"l_suppkey", T::kInteger},
    {"l_linenumber", T::kInteger}, {"l_quantity", T::kQuantity}, {"l_extendedprice", T::kDecimal},
    {"l_discount", T::kDecimal}, {"l_tax", T::kDecimal}, {"l_returnflag", T::kFlag},
    {"l_linestatus", T::kFlag}, {"l_shipdate", T::kDate}, {"l_commitdate", T::kDate},
    {"l_receiptdate", T::kDate}, {"l_shipinstruct", T::kText}, {"l_shipmode", T::kText},
    {"l_comment", T::kText},
}};

std::uint64_t parse_digits(std::string_view s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) throw ParseError(fmt::format("'{}' is not an integer", s));
  return v;
}

// Signed hundredths of "-?d+.dd".
std::int64_t parse_hundredths(std::string_view s) {
  bool neg = !s.empty() && s[0] == '-';
  if (neg) s.remove_prefix(1);
  const auto dot = s.find('.');
  if (dot == std::string_view::npos || dot == 0 || s.size() - dot != 3)
    throw ParseError(fmt::format("'{}' is not a two-place decimal", s));
  const auto whole = parse_digits(s.substr(0, dot));
  const auto frac = parse_digits(s.substr(dot + 1));
  const auto v = static_cast<std::int64_t>(whole * 100 + frac);
  return neg ? -v : v;
}

void check(std::string_view text, ColumnType type) {
  switch (type) {
    case T::kInteger: (void)parse_digits(text); break;
    case T::kDecimal:
    case T::kQuantity: (void)parse_hundredths(text); break;
    case T::kDate: (void)parse_date(text); break;
    case T::kFlag:
      if (text.size() != 1) throw ParseError(fmt::format("'{}' is not a single character", text));
      break;
    case T::kSegment:
      if (!parse_market_segment(text)) throw ParseError(fmt::format("'{}' is not a market segment", text));
      break;
    case T::kText: break;
  }
}

}  // namespace

std::span<const Column> schema(TableKind kind) {
  switch (kind) {
    case TableKind::kCustomer: return kCustomer;
    case TableKind::kOrders: return kOrders;
    case TableKind::kLineitem: return kLineitem;
  }
  return {};
}

std::string_view table_name(TableKind kind) {
  switch (kind) {
    case TableKind::kCustomer: return "customer";
    case TableKind::kOrders: return "orders";
    case TableKind::kLineitem: return "lineitem";
  }
  return "?";
}

std::string_view file_name(TableKind kind) {
  switch (kind) {
    case TableKind::kCustomer: return "customer.tbl";
    case TableKind::kOrders: return "orders.tbl";
    case TableKind::kLineitem: return "lineitem.tbl";
  }
  return "?";
}

Table parse_tbl(std::istream& in, TableKind kind, std::string_view source) {
  const auto cols = schema(kind);
  Table t{kind, {}};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto bar = line.find('|', start);
      if (bar == std::string::npos) {
        if (start != line.size()) fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, bar - start));
      start = bar + 1;
    }
    if (fields.size() != cols.size())
      throw ParseError(fmt::format("{}:{}: expected {} columns for {}, found {}", source, lineno, cols.size(),
                                   table_name(kind), fields.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) {
      try {
        check(fields[i], cols[i].type);
      } catch (const ParseError& e) {
        throw ParseError(fmt::format("{}:{}: column {}: {}", source, lineno, cols[i].name, e.what()));
      }
    }
    t.rows.push_back(std::move(fields));
  }
  return t;
}

Table read_tbl(const std::filesystem::path& path, TableKind kind) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open {}", path.string()));
  return parse_tbl(in, kind, path.string());
}

void write_tbl(std::ostream& out, const Table& table) {
  for (const auto& row : table.rows) {
    for (const auto& f : row) out << f << '|';
    out << '\n';
  }
}

std::uint64_t encode_value(std::string_view text, ColumnType type) {
  switch (type) {
    case T::kInteger: return parse_digits(text);
    case T::kDecimal: {
      const auto v = parse_hundredths(text);
      if (v < 0) throw ParseError(fmt::format("negative value '{}' cannot be encoded", text));
      return static_cast<std::uint64_t>(v);
    }
    case T::kQuantity: {
      const auto v = parse_hundredths(text);
      if (v < 0 || v % 100 != 0) throw ParseError(fmt::format("quantity '{}' is not a whole number", text));
      return static_cast<std::uint64_t>(v / 100);
    }
    case T::kDate: return parse_date(text);
    case T::kFlag:
      if (text.size() != 1) throw ParseError(fmt::format("'{}' is not a single character", text));
      return static_cast<unsigned char>(text[0]);
    case T::kSegment:
      if (auto s = parse_market_segment(text)) return static_cast<std::uint64_t>(*s);
      throw ParseError(fmt::format("'{}' is not a market segment", text));
    case T::kText: break;
  }
  throw ParseError(fmt::format("text value '{}' cannot be encoded", text));
}

std::string decode_value(std::uint64_t v, ColumnType type) {
  switch (type) {
    case T::kInteger: return fmt::format("{}", v);
    case T::kDecimal: return fmt::format("{}.{:02}", v / 100, v % 100);
    case T::kQuantity: return fmt::format("{}.00", v);
    case T::kDate: return format_date(static_cast<std::uint32_t>(v));
    case T::kFlag: return std::string(1, static_cast<char>(v));
    case T::kSegment:
      if (v > 4) throw ParseError(fmt::format("market segment code {} out of range", v));
      return std::string(to_string(static_cast<MarketSegment>(v)));
    case T::kText: break;
  }
  throw ParseError("text columns have no encoding");
}

}  // namespace diba::tpch
