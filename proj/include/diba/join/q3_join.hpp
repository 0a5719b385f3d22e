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
#include <string>
#include <vector>

#include "diba/engine/cost_model.hpp"
#include "diba/join/circular_join.hpp"
#include "diba/join/hbsj.hpp"
#include "diba/punits/unit.hpp"

namespace diba::join {

/// Q3's three-way join in the optimized arrangement: CUSTOMER and LINEITEM
/// windows each indexed once, ORDERS held in one window with two indexes
/// (o_orderkey and o_custkey).
///   CUSTOMER arrival: probe ORDERS by custkey, then LINEITEM by orderkey.
///   ORDERS arrival:   probe CUSTOMER by custkey, then LINEITEM by orderkey.
///   LINEITEM arrival: probe ORDERS by orderkey, then CUSTOMER by custkey.
/// Outputs use the q3_joined layout.
class Q3Join {
 public:
  explicit Q3Join(const HbsjConfig& cfg);

  struct StepResult {
    std::vector<Tuple> joined;
    Cycles cycles = 0;
  };

  StepResult step(const Tuple& t, const CostModel& cost);
  void clear();

  /// Overflow occupancy in the order l_orderkey, o_orderkey, c_custkey, o_custkey.
  std::array<std::size_t, 4> overflow_occupancy() const;

  const JoinWindow& lineitems() const { return lineitem_; }
  const JoinWindow& orders() const { return orders_; }
  const JoinWindow& customers() const { return customer_; }

 private:
  JoinWindow lineitem_;
  JoinWindow orders_;  // index 0: o_orderkey, index 1: o_custkey
  JoinWindow customer_;
};

/// Builds the joined output tuple from one row of each stream.
Tuple make_q3_joined(const Tuple& lineitem, const Tuple& order);

std::vector<std::string> q3_index_names();

/// Slot wrapper around Q3Join.
class Q3JoinUnit final : public punits::ProcessingUnit {
 public:
  explicit Q3JoinUnit(const HbsjConfig& cfg);

  std::string_view kind() const override { return "Q3_CMJOIN"; }
  const TupleLayout* input_layout(StreamId s) const override;
  StreamId output_stream() const override { return streams::kResult; }
  const TupleLayout& output_layout() const override;
  void configure(std::span<const Atom> atoms) override;
  Cycles process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) override;
  std::vector<std::string> index_names() const override { return q3_index_names(); }
  void overflow_occupancy(std::vector<std::size_t>& out) const override;

  const Q3Join& join() const { return join_; }

 private:
  Q3Join join_;
};

/// The four stages of the direct arrangement: LINEITEM by l_orderkey,
/// ORDERS by o_orderkey, ORDERS by o_custkey, CUSTOMER by c_custkey.
std::vector<StageSpec> q3_direct_stages();

/// Slot wrapper around a generic CircularJoin wired as in the direct arrangement.
class Q3DirectJoinUnit final : public punits::ProcessingUnit {
 public:
  explicit Q3DirectJoinUnit(const HbsjConfig& cfg);

  std::string_view kind() const override { return "Q3_CMJOIN_DIRECT"; }
  const TupleLayout* input_layout(StreamId s) const override;
  StreamId output_stream() const override { return streams::kResult; }
  const TupleLayout& output_layout() const override;
  void configure(std::span<const Atom> atoms) override;
  Cycles process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) override;
  std::vector<std::string> index_names() const override { return q3_index_names(); }
  void overflow_occupancy(std::vector<std::size_t>& out) const override;

 private:
  CircularJoin join_;
};

}  // namespace diba::join
