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

#include "diba/punits/predicate.hpp"

#include <fmt/format.h>

#include "diba/core/error.hpp"

namespace diba::punits {

bool Predicate::matches(const Tuple& t) const {
  for (const auto& a : atoms) {
    if (a.op == AtomOp::kSet) continue;
    if (a.field >= t.values.size())
      throw SimulationFault(fmt::format("predicate names field {} of a {}-field tuple", a.field, t.values.size()));
    if (!evaluate(a, t.values[a.field])) return false;
  }
  return true;
}

std::optional<Tuple> selection_process(const Tuple& t, const Predicate& p) {
  if (t.stream == streams::kEnd || p.matches(t)) return t;
  return std::nullopt;
}

}  // namespace diba::punits
