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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "diba/core/instruction.hpp"
#include "diba/core/stream.hpp"

namespace diba::topology {

/// Predicate or parameter before field names are resolved against a unit.
/// For AtomOp::kSet the field is a parameter name ("limit", "end_count").
struct PlanAtom {
  std::string field;
  AtomOp op = AtomOp::kEqual;
  std::uint32_t value = 0;
};

struct PlanSource {
  std::string name;
  StreamId stream;
};

struct PlanOperator {
  std::string id;
  std::string kind;
  std::vector<std::string> inputs;  // source names or operator ids
  std::optional<StreamId> output_stream;
  std::vector<PlanAtom> atoms;
};

/// Operators must be listed producers-first.
struct QueryPlan {
  std::string name;
  std::vector<PlanSource> sources;
  std::vector<PlanOperator> operators;
  std::string output;  // id of the operator whose results leave the topology

  /// Throws ConfigError on unknown inputs, duplicate ids or ordering problems.
  void validate() const;
};

/// Atom values in JSON may be integers, "YYYY-MM-DD" dates, market segment
/// names or single characters (stored as their ASCII code).
QueryPlan plan_from_json(const nlohmann::json& j);
nlohmann::json to_json(const QueryPlan& p);

}  // namespace diba::topology
