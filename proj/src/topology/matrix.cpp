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

#include "diba/topology/matrix.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "diba/core/error.hpp"

namespace diba::topology {

void TopologyMatrix::validate(const UnitLibrary& lib) const {
  if (rows == 0 || cols == 0) throw ConfigError("topology needs at least one row and one column");
  if (rows > 64 || cols > 64) throw ConfigError(fmt::format("topology {}x{} is too large", rows, cols));
  if (slots_per_brick == 0 || slots_per_brick > 4)
    throw ConfigError(fmt::format("slots per brick must be 1..4, got {}", slots_per_brick));
  if (bricks.size() != rows * cols)
    throw ConfigError(fmt::format("{}x{} topology lists {} bricks", rows, cols, bricks.size()));
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    const auto& b = bricks[i];
    const auto where = fmt::format("brick ({}, {})", i / cols, i % cols);
    if (b.empty() || b.size() > slots_per_brick)
      throw ConfigError(fmt::format("{} has {} slots, limit {}", where, b.size(), slots_per_brick));
    if (std::find(b.begin(), b.end(), kBypass) == b.end())
      throw ConfigError(fmt::format("{} has no BYPASS slot", where));
    for (const auto& k : b)
      if (!lib.contains(k)) throw ConfigError(fmt::format("{} names unknown unit kind '{}'", where, k));
  }
}

TopologyMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    TopologyMatrix m;
    m.rows = j.at("rows").get<std::size_t>();
    m.cols = j.at("cols").get<std::size_t>();
    m.slots_per_brick = j.value("slots_per_brick", std::size_t{4});
    m.bricks = j.at("bricks").get<std::vector<std::vector<std::string>>>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("bad topology json: {}", e.what()));
  }
}

nlohmann::json to_json(const TopologyMatrix& m) {
  return {{"rows", m.rows}, {"cols", m.cols}, {"slots_per_brick", m.slots_per_brick}, {"bricks", m.bricks}};
}

}  // namespace diba::topology
