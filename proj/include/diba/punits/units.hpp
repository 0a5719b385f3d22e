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
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "diba/punits/group_aggregator.hpp"
#include "diba/punits/predicate.hpp"
#include "diba/punits/top_k.hpp"
#include "diba/punits/unit.hpp"

namespace diba::punits {

/// Filters one stream; output keeps the input stream and layout.
class SelectionUnit final : public ProcessingUnit {
 public:
  SelectionUnit(std::string kind, StreamId stream, TupleLayout layout);

  std::string_view kind() const override { return kind_; }
  const TupleLayout* input_layout(StreamId s) const override;
  StreamId output_stream() const override { return stream_; }
  const TupleLayout& output_layout() const override { return layout_; }
  void configure(std::span<const Atom> atoms) override;
  Cycles process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) override;

  const Predicate& predicate() const { return predicate_; }

 private:
  std::string kind_;
  StreamId stream_;
  TupleLayout layout_;
  Predicate predicate_;
};

class GroupAggUnit final : public ProcessingUnit {
 public:
  GroupAggUnit(std::string kind, StreamId in_stream, TupleLayout in_layout, TupleLayout out_layout, GroupSpec spec);

  std::string_view kind() const override { return kind_; }
  const TupleLayout* input_layout(StreamId s) const override;
  StreamId output_stream() const override { return out_stream_; }
  const TupleLayout& output_layout() const override { return out_layout_; }
  void configure(std::span<const Atom> atoms) override;
  Cycles process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) override;

 private:
  std::string kind_;
  StreamId in_stream_;
  StreamId out_stream_;
  TupleLayout in_layout_;
  TupleLayout out_layout_;
  GroupAggregator agg_;
};

class OrderByUnit final : public ProcessingUnit {
 public:
  OrderByUnit(std::string kind, StreamId stream, TupleLayout layout, std::vector<SortKey> keys,
              std::size_t default_limit);

  std::string_view kind() const override { return kind_; }
  const TupleLayout* input_layout(StreamId s) const override;
  StreamId output_stream() const override { return stream_; }
  const TupleLayout& output_layout() const override { return layout_; }
  void configure(std::span<const Atom> atoms) override;
  Cycles process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) override;

 private:
  std::string kind_;
  StreamId stream_;
  TupleLayout layout_;
  TopK topk_;
};

/// Test probe: records every tuple it receives and emits nothing.
/// Optionally stalls a random 0..max_stall extra cycles per tuple.
class CaptureUnit final : public ProcessingUnit {
 public:
  using Log = std::vector<Tuple>;

  CaptureUnit(std::map<StreamId, TupleLayout> layouts, std::shared_ptr<Log> log, std::uint32_t max_stall = 0,
              std::uint64_t seed = 0);

  std::string_view kind() const override { return "TAP"; }
  const TupleLayout* input_layout(StreamId s) const override;
  StreamId output_stream() const override { return streams::kResult; }
  const TupleLayout& output_layout() const override { return end_layout(); }
  void configure(std::span<const Atom> atoms) override;
  Cycles process(const Tuple& in, std::vector<Tuple>& out, const CostModel& cost) override;

  const std::vector<std::vector<Atom>>& configs() const { return configs_; }

 private:
  std::map<StreamId, TupleLayout> layouts_;
  std::shared_ptr<Log> log_;
  std::uint32_t max_stall_;
  std::mt19937_64 rng_;
  std::vector<std::vector<Atom>> configs_;
};

}  // namespace diba::punits
