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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diba/core/instruction.hpp"
#include "diba/core/tuple.hpp"
#include "diba/engine/cost_model.hpp"

namespace diba::punits {

/// A processing unit occupying one brick slot. The hosting slot handles
/// framing, END fan-in and flit emission; the unit sees whole tuples.
class ProcessingUnit {
 public:
  virtual ~ProcessingUnit() = default;

  virtual std::string_view kind() const = 0;
  /// Layout for tuples of stream `s`, or nullptr when the unit ignores that stream.
  virtual const TupleLayout* input_layout(StreamId s) const = 0;
  virtual StreamId output_stream() const = 0;
  virtual const TupleLayout& output_layout() const = 0;

  /// Applies predicate atoms and unit parameters other than END_COUNT.
  virtual void configure(std::span<const Atom> atoms) = 0;
  /// Handles one tuple (END included) and returns the cycles it occupied the unit.
  virtual Cycles process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) = 0;

  /// Overflow occupancy per hash index, for units that keep join state.
  virtual std::vector<std::string> index_names() const { return {}; }
  virtual void overflow_occupancy(std::vector<std::size_t>& /*out*/) const {}
};

}  // namespace diba::punits
