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

#include <fstream>
#include <sstream>
#include <string>

#include "diba/engine/engine.hpp"
#include "diba/topology/assigner.hpp"
#include "diba/topology/instance.hpp"
#include "diba/tpch/datagen.hpp"
#include "diba/tpch/queries.hpp"

namespace diba::testing {

inline topology::BuildOptions join_options(std::size_t window, std::size_t ht, std::size_t overflow) {
  topology::BuildOptions o;
  o.join.window = window;
  o.join.hash_rows = ht;
  o.join.overflow_capacity = overflow;
  return o;
}

/// A built topology with the given plans deployed in order.
inline topology::TopologyInstance deployed(const topology::TopologyMatrix& m,
                                          std::initializer_list<topology::QueryPlan> plans,
                                          const topology::BuildOptions& o = {}) {
  topology::TopologyInstance inst(m, topology::UnitLibrary::standard(), o);
  for (const auto& p : plans) topology::deploy(inst, topology::assign_query(p, inst));
  return inst;
}

inline topology::TopologyInstance q3_instance(std::size_t ht, std::size_t window = 1024, std::size_t overflow = 1024,
                                              tpch::JoinVariant v = tpch::JoinVariant::kOptimized,
                                              const Q3Params& p = q3_defaults()) {
  return deployed(tpch::q3_topology(v), {tpch::q3_plan(p, v)}, join_options(window, ht, overflow));
}

inline std::string q3_csv(const std::vector<Tuple>& rows) {
  std::ostringstream ss;
  tpch::write_q3_results(ss, rows);
  return ss.str();
}

inline std::string q1_csv(const std::vector<Tuple>& rows) {
  std::ostringstream ss;
  tpch::write_q1_results(ss, rows);
  return ss.str();
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string micro_dir() { return std::string(DIBA_DATA_DIR) + "/micro"; }

}  // namespace diba::testing
