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

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "diba/join/hbsj.hpp"
#include "diba/punits/unit.hpp"

namespace diba::topology {

inline constexpr const char* kBypass = "BYPASS";

/// Construction-time knobs handed to every unit factory.
struct UnitContext {
  join::HbsjConfig join;
};

using UnitFactory = std::function<std::unique_ptr<punits::ProcessingUnit>(const UnitContext&)>;

/// Pre-compiled unit kinds a topology can name. BYPASS is built in and has no factory.
class UnitLibrary {
 public:
  /// Every Q3 and Q1 kind shipped with the simulator.
  static UnitLibrary standard();

  void add(const std::string& kind, UnitFactory factory);
  bool contains(const std::string& kind) const;
  std::unique_ptr<punits::ProcessingUnit> make(const std::string& kind, const UnitContext& ctx) const;
  std::vector<std::string> kinds() const;

 private:
  std::map<std::string, UnitFactory> factories_;
};

}  // namespace diba::topology
