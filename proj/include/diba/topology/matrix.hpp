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

#include "json.hpp"

#include "diba/topology/unit_library.hpp"

namespace diba::topology {

/// R x C grid of bricks, each listing its slot kinds. Brick (r, c) is bricks[r * cols + c].
struct TopologyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t slots_per_brick = 4;
  std::vector<std::vector<std::string>> bricks;

  const std::vector<std::string>& brick(std::size_t r, std::size_t c) const { return bricks.at(r * cols + c); }

  /// Throws ConfigError: empty grid, wrong brick count, missing BYPASS,
  /// too many slots or a kind the library does not know.
  void validate(const UnitLibrary& lib) const;

  bool operator==(const TopologyMatrix&) const = default;
};

TopologyMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TopologyMatrix& m);

}  // namespace diba::topology
