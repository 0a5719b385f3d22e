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

#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diba::tpch {

enum class TableKind { kCustomer, kOrders, kLineitem };

enum class ColumnType {
  kInteger,   // unsigned decimal digits
  kDecimal,   // two fraction digits; encoded as hundredths
  kQuantity,  // decimal with a zero fraction; encoded as whole units
  kDate,      // YYYY-MM-DD; encoded as days since 1992-01-01
  kFlag,      // one character; encoded as its ASCII code
  kSegment,   // market segment name; encoded as its enum value
  kText,      // free text; never encoded
};

struct Column {
  std::string_view name;
  ColumnType type;
};

std::span<const Column> schema(TableKind kind);
std::string_view table_name(TableKind kind);
std::string_view file_name(TableKind kind);

/// Rows of raw column text, as read from a DBGen-style `.tbl` file.
struct Table {
  TableKind kind = TableKind::kLineitem;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const Table&) const = default;
};

/// Parses `|`-separated rows with a trailing `|`. Throws ParseError naming
/// the source and line on a wrong column count or a value of the wrong type.
Table parse_tbl(std::istream& in, TableKind kind, std::string_view source = "<stream>");
Table read_tbl(const std::filesystem::path& path, TableKind kind);
void write_tbl(std::ostream& out, const Table& table);

/// Column text to its wire encoding; throws ParseError for text columns.
std::uint64_t encode_value(std::string_view text, ColumnType type);
std::string decode_value(std::uint64_t value, ColumnType type);

}  // namespace diba::tpch
