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

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "diba/core/tuple.hpp"

namespace diba::punits {

enum class AggFn {
  kSum,      // operand 0
  kCount,    // no operands
  kRevenue,  // price * (100 - discount)
  kCharge,   // price * (100 - discount) * (100 + tax)
};

struct AggregateSpec {
  AggFn fn = AggFn::kSum;
  std::vector<std::size_t> operands;
};

struct GroupSpec {
  std::vector<std::size_t> key_fields;
  std::vector<AggregateSpec> aggregates;
  StreamId output_stream = streams::kResult;
  std::size_t capacity = std::size_t{1} << 20;
};

/// Hash group-by. Accumulates until END, then emits one tuple per group
/// (keys then aggregates, in first-seen order) followed by END and resets.
class GroupAggregator {
 public:
  explicit GroupAggregator(GroupSpec spec);

  std::vector<Tuple> step(const Tuple& t);
  std::size_t groups() const { return order_.size(); }
  void reset();

 private:
  GroupSpec spec_;
  std::map<std::vector<std::uint64_t>, std::size_t> index_;
  std::vector<std::vector<std::uint64_t>> order_;
  std::vector<std::vector<std::uint64_t>> acc_;
};

}  // namespace diba::punits
