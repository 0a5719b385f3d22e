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

#include "diba/topology/plan.hpp"

#include <fmt/format.h>

#include <set>

#include "diba/core/date.hpp"
#include "diba/core/error.hpp"
#include "diba/core/tpch_schema.hpp"

namespace diba::topology {

void QueryPlan::validate() const {
  std::set<std::string> known;
  for (const auto& s : sources) {
    if (!s.stream.is_data() || s.stream == streams::kEnd)
      throw ConfigError(fmt::format("source '{}' uses non-data stream {}", s.name, s.stream.value));
    if (!known.insert(s.name).second) throw ConfigError(fmt::format("duplicate name '{}' in plan", s.name));
  }
  if (operators.empty()) throw ConfigError(fmt::format("plan '{}' has no operators", name));
  for (const auto& op : operators) {
    if (op.inputs.empty()) throw ConfigError(fmt::format("operator '{}' has no inputs", op.id));
    for (const auto& in : op.inputs)
      if (!known.count(in))
        throw ConfigError(fmt::format("operator '{}' reads '{}' which is not defined before it", op.id, in));
    if (!known.insert(op.id).second) throw ConfigError(fmt::format("duplicate name '{}' in plan", op.id));
    if (op.atoms.size() + 1 > kMaxAtoms)
      throw ConfigError(fmt::format("operator '{}' has too many predicate atoms", op.id));
  }
  bool found = false;
  for (const auto& op : operators) found |= op.id == output;
  if (!found) throw ConfigError(fmt::format("plan output '{}' is not an operator", output));
}

namespace {

std::uint32_t atom_value(const nlohmann::json& v) {
  if (v.is_number_unsigned() || v.is_number_integer()) {
    const auto x = v.get<std::int64_t>();
    if (x < 0 || x > 0xFFFFFFFFll) throw ConfigError(fmt::format("atom value {} out of range", x));
    return static_cast<std::uint32_t>(x);
  }
  if (!v.is_string()) throw ConfigError("atom value must be a number or string");
  const auto s = v.get<std::string>();
  if (s.size() == 10 && s[4] == '-' && s[7] == '-') return parse_date(s);
  if (auto seg = parse_market_segment(s)) return static_cast<std::uint32_t>(*seg);
  if (s.size() == 1) return static_cast<unsigned char>(s[0]);
  throw ConfigError(fmt::format("cannot interpret atom value '{}'", s));
}

}  // namespace

QueryPlan plan_from_json(const nlohmann::json& j) {
  try {
    QueryPlan p;
    p.name = j.at("name").get<std::string>();
    for (const auto& s : j.at("sources"))
      p.sources.push_back({s.at("name").get<std::string>(), StreamId{s.at("stream").get<std::uint8_t>()}});
    for (const auto& o : j.at("operators")) {
      PlanOperator op;
      op.id = o.at("id").get<std::string>();
      op.kind = o.at("kind").get<std::string>();
      op.inputs = o.at("inputs").get<std::vector<std::string>>();
      if (o.contains("output_stream")) op.output_stream = StreamId{o["output_stream"].get<std::uint8_t>()};
      for (const auto& a : o.value("predicate", nlohmann::json::array()))
        op.atoms.push_back({a.at("field").get<std::string>(), parse_atom_op(a.at("op").get<std::string>()),
                            atom_value(a.at("value"))});
      const auto params = o.value("params", nlohmann::json::object());
      for (const auto& [k, v] : params.items())
        op.atoms.push_back({k, AtomOp::kSet, atom_value(v)});
      p.operators.push_back(std::move(op));
    }
    p.output = j.at("output").get<std::string>();
    p.validate();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("bad plan json: {}", e.what()));
  }
}

nlohmann::json to_json(const QueryPlan& p) {
  nlohmann::json j;
  j["name"] = p.name;
  j["sources"] = nlohmann::json::array();
  for (const auto& s : p.sources) j["sources"].push_back({{"name", s.name}, {"stream", s.stream.value}});
  j["operators"] = nlohmann::json::array();
  for (const auto& op : p.operators) {
    nlohmann::json o{{"id", op.id}, {"kind", op.kind}, {"inputs", op.inputs}};
    if (op.output_stream) o["output_stream"] = op.output_stream->value;
    nlohmann::json pred = nlohmann::json::array();
    nlohmann::json params = nlohmann::json::object();
    for (const auto& a : op.atoms) {
      if (a.op == AtomOp::kSet) params[a.field] = a.value;
      else pred.push_back({{"field", a.field}, {"op", to_string(a.op)}, {"value", a.value}});
    }
    if (!pred.empty()) o["predicate"] = pred;
    if (!params.empty()) o["params"] = params;
    j["operators"].push_back(o);
  }
  j["output"] = p.output;
  return j;
}

}  // namespace diba::topology
