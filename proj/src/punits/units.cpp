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

#include "diba/punits/units.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "diba/core/error.hpp"

namespace diba::punits {

namespace {

void check_fields(std::span<const Atom> atoms, const TupleLayout& layout, std::string_view kind) {
  for (const auto& a : atoms)
    if (a.op != AtomOp::kSet && a.field >= layout.field_count())
      throw SimulationFault(fmt::format("{} has no field {} in layout '{}'", kind, a.field, layout.name()));
}

}  // namespace

SelectionUnit::SelectionUnit(std::string kind, StreamId stream, TupleLayout layout)
    : kind_(std::move(kind)), stream_(stream), layout_(std::move(layout)) {}

const TupleLayout* SelectionUnit::input_layout(StreamId s) const { return s == stream_ ? &layout_ : nullptr; }

void SelectionUnit::configure(std::span<const Atom> atoms) {
  check_fields(atoms, layout_, kind_);
  predicate_.atoms.clear();
  for (const auto& a : atoms)
    if (a.op != AtomOp::kSet) predicate_.atoms.push_back(a);
}

Cycles SelectionUnit::process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) {
  if (auto t = selection_process(in, predicate_)) out.push_back(std::move(*t));
  return cost.selection;
}

GroupAggUnit::GroupAggUnit(std::string kind, StreamId in_stream, TupleLayout in_layout, TupleLayout out_layout,
                           GroupSpec spec)
    : kind_(std::move(kind)),
      in_stream_(in_stream),
      out_stream_(spec.output_stream),
      in_layout_(std::move(in_layout)),
      out_layout_(std::move(out_layout)),
      agg_(std::move(spec)) {}

const TupleLayout* GroupAggUnit::input_layout(StreamId s) const { return s == in_stream_ ? &in_layout_ : nullptr; }

void GroupAggUnit::configure(std::span<const Atom> /*atoms*/) {}

Cycles GroupAggUnit::process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) {
  auto r = agg_.step(in);
  out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return cost.aggregation;
}

OrderByUnit::OrderByUnit(std::string kind, StreamId stream, TupleLayout layout, std::vector<SortKey> keys,
                         std::size_t default_limit)
    : kind_(std::move(kind)), stream_(stream), layout_(std::move(layout)), topk_(std::move(keys), default_limit) {}

const TupleLayout* OrderByUnit::input_layout(StreamId s) const { return s == stream_ ? &layout_ : nullptr; }

void OrderByUnit::configure(std::span<const Atom> atoms) {
  for (const auto& a : atoms)
    if (a.op == AtomOp::kSet && a.field == params::kLimit) topk_.set_limit(a.value);
}

Cycles OrderByUnit::process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) {
  std::uint64_t comparisons = 0;
  auto r = topk_.step(in, &comparisons);
  out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return std::max<Cycles>(1, comparisons * cost.comparison);
}

CaptureUnit::CaptureUnit(std::map<StreamId, TupleLayout> layouts, std::shared_ptr<Log> log, std::uint32_t max_stall,
                         std::uint64_t seed)
    : layouts_(std::move(layouts)), log_(std::move(log)), max_stall_(max_stall), rng_(seed) {}

const TupleLayout* CaptureUnit::input_layout(StreamId s) const {
  auto it = layouts_.find(s);
  return it == layouts_.end() ? nullptr : &it->second;
}

void CaptureUnit::configure(std::span<const Atom> atoms) { configs_.emplace_back(atoms.begin(), atoms.end()); }

Cycles CaptureUnit::process(const Tuple& in, std::vector<Tuple>& /*out*/, const CostModel& /*cost*/) {
  log_->push_back(in);
  return 1 + (max_stall_ == 0 ? 0 : rng_() % (max_stall_ + 1));
}

}  // namespace diba::punits
