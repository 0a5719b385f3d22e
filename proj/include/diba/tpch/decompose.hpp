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
#include <map>
#include <string>
#include <vector>

#include "diba/core/tuple.hpp"
#include "diba/engine/engine.hpp"
#include "diba/tpch/tbl.hpp"

namespace diba::tpch {

inline constexpr const char* kRowIdField = "row_id";

/// Columns a layout did not project, keyed by row id, so results can be
/// widened back to full rows.
struct ParseTable {
  TableKind kind = TableKind::kLineitem;
  std::vector<std::size_t> retained;  // column positions kept here
  std::map<std::uint64_t, std::vector<std::string>> rows;
};

struct Decomposed {
  engine::StreamSource source;
  ParseTable parse_table;
};

/// Projects `table` onto `layout`. Field names are schema column names; a
/// field called row_id receives the 1-based row number.
Decomposed decompose(const Table& table, const TupleLayout& layout, StreamId stream);

/// Widens results. Tuples carrying row_id become the original row (all
/// columns, schema order); others (aggregates) are rendered field by field.
std::vector<std::vector<std::string>> compose(const std::vector<Tuple>& results, const TupleLayout& layout,
                                              const ParseTable& parse_table);

}  // namespace diba::tpch
