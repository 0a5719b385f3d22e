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

#include "diba/tpch/decompose.hpp"

#include <fmt/format.h>

#include <set>

#include "diba/core/error.hpp"

namespace diba::tpch {

namespace {

std::size_t column_of(TableKind kind, std::string_view name) {
  const auto cols = schema(kind);
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (cols[i].name == name) return i;
  throw ConfigError(fmt::format("{} has no column '{}'", table_name(kind), name));
}

}  // namespace

Decomposed decompose(const Table& table, const TupleLayout& layout, StreamId stream) {
  const auto cols = schema(table.kind);
  std::vector<std::optional<std::size_t>> source;  // column per field, nullopt for row_id
  std::set<std::size_t> projected;
  bool has_row_id = false;
  for (const auto& f : layout.fields()) {
    if (f.name == kRowIdField) {
      source.emplace_back();
      has_row_id = true;
      continue;
    }
    const auto c = column_of(table.kind, f.name);
    if (cols[c].type == ColumnType::kText)
      throw ConfigError(fmt::format("text column '{}' cannot be projected into a tuple", f.name));
    source.emplace_back(c);
    projected.insert(c);
  }

  Decomposed d;
  d.source.name = std::string(table_name(table.kind));
  d.source.stream = stream;
  d.source.layout = layout;
  d.parse_table.kind = table.kind;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (!projected.count(c)) d.parse_table.retained.push_back(c);

  d.source.tuples.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::uint64_t row_id = r + 1;
    Tuple t{stream, {}};
    t.values.reserve(source.size());
    for (std::size_t i = 0; i < source.size(); ++i)
      t.values.push_back(source[i] ? encode_value(row[*source[i]], cols[*source[i]].type) : row_id);
    d.source.tuples.push_back(std::move(t));
    if (has_row_id) {
      std::vector<std::string> kept;
      for (auto c : d.parse_table.retained) kept.push_back(row[c]);
      d.parse_table.rows.emplace(row_id, std::move(kept));
    }
  }
  return d;
}

std::vector<std::vector<std::string>> compose(const std::vector<Tuple>& results, const TupleLayout& layout,
                                              const ParseTable& pt) {
  std::vector<std::vector<std::string>> out;
  const auto row_idx = layout.index_of(kRowIdField);
  const auto cols = schema(pt.kind);
  for (const auto& t : results) {
    if (!row_idx) {
      std::vector<std::string> row;
      for (auto v : t.values) row.push_back(fmt::format("{}", v));
      out.push_back(std::move(row));
      continue;
    }
    const auto id = t.values.at(*row_idx);
    auto it = pt.rows.find(id);
    if (it == pt.rows.end()) throw ConfigError(fmt::format("result names unknown row id {}", id));
    std::vector<std::string> row(cols.size());
    for (std::size_t k = 0; k < pt.retained.size(); ++k) row[pt.retained[k]] = it->second[k];
    for (std::size_t i = 0; i < layout.field_count(); ++i) {
      if (i == *row_idx) continue;
      const auto c = column_of(pt.kind, layout.fields()[i].name);
      row[c] = decode_value(t.values[i], cols[c].type);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace diba::tpch
