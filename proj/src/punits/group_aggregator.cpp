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

#include "diba/punits/group_aggregator.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"
#include "diba/core/tpch_schema.hpp"

namespace diba::punits {

GroupAggregator::GroupAggregator(GroupSpec spec) : spec_(std::move(spec)) {
  for (const auto& a : spec_.aggregates) {
    const std::size_t need = a.fn == AggFn::kCount ? 0 : a.fn == AggFn::kSum ? 1 : a.fn == AggFn::kRevenue ? 2 : 3;
    if (a.operands.size() != need) throw ConfigError("aggregate operand count does not match its function");
  }
}

void GroupAggregator::reset() {
  index_.clear();
  order_.clear();
  acc_.clear();
}

std::vector<Tuple> GroupAggregator::step(const Tuple& t) {
  std::vector<Tuple> out;
  if (t.stream == streams::kEnd) {
    out.reserve(order_.size() + 1);
    for (std::size_t g = 0; g < order_.size(); ++g) {
      Tuple r{spec_.output_stream, order_[g]};
      r.values.insert(r.values.end(), acc_[g].begin(), acc_[g].end());
      out.push_back(std::move(r));
    }
    out.push_back(t);
    reset();
    return out;
  }
  std::vector<std::uint64_t> key;
  key.reserve(spec_.key_fields.size());
  for (auto f : spec_.key_fields) key.push_back(t.values.at(f));
  auto [it, fresh] = index_.try_emplace(key, order_.size());
  if (fresh) {
    if (order_.size() >= spec_.capacity) {
      index_.erase(it);
      throw SimulationFault(fmt::format("group buffer full at {} groups", spec_.capacity));
    }
    order_.push_back(std::move(key));
    acc_.emplace_back(spec_.aggregates.size(), 0);
  }
  auto& acc = acc_[it->second];
  for (std::size_t i = 0; i < spec_.aggregates.size(); ++i) {
    const auto& a = spec_.aggregates[i];
    const auto v = [&](std::size_t k) { return t.values.at(a.operands[k]); };
    switch (a.fn) {
      case AggFn::kSum: acc[i] += v(0); break;
      case AggFn::kCount: acc[i] += 1; break;
      case AggFn::kRevenue: acc[i] += compute_revenue(v(0), v(1)); break;
      case AggFn::kCharge: acc[i] += compute_charge(v(0), v(1), v(2)); break;
    }
  }
  return out;
}

}  // namespace diba::punits
