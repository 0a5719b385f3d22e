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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "diba/core/tuple.hpp"
#include "diba/engine/cost_model.hpp"
#include "diba/join/hbsj.hpp"

namespace diba::join {

/// A probe key for a stage can be read from field `field` of the tuple of
/// stream `stream` once that stream is part of the intermediate result.
struct Binding {
  StreamId stream;
  std::size_t field = 0;
};

struct StageSpec {
  std::string name;
  StreamId origin;
  std::size_t key_field = 0;       // indexed field of the origin tuple
  std::vector<Binding> bindings;   // any one supplies the probe key; all must agree
};

/// One tuple per participating stream.
using Composite = std::array<std::optional<Tuple>, streams::kCount>;

/// N-stage multiway stream join. A new tuple is stored in every stage of its
/// stream, then visits the remaining stages in circular order. A stage whose
/// probe key is not yet bound is deferred to a later lap; a stage whose
/// stream is already present is passed through.
class CircularJoin {
 public:
  CircularJoin(std::vector<StageSpec> stages, const HbsjConfig& cfg);

  struct StepResult {
    std::vector<Composite> outputs;
    Cycles cycles = 0;
  };

  StepResult step(const Tuple& t, const CostModel& cost);
  void clear();

  std::size_t stages() const { return specs_.size(); }
  const StageSpec& spec(std::size_t i) const { return specs_.at(i); }
  std::size_t overflow_occupancy(std::size_t stage) const { return windows_.at(stage).overflow_occupancy(0); }
  const JoinWindow& window(std::size_t stage) const { return windows_.at(stage); }

 private:
  std::vector<StageSpec> specs_;
  std::vector<JoinWindow> windows_;
};

}  // namespace diba::join
