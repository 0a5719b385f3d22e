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

#include <optional>
#include <span>
#include <vector>

#include "diba/core/instruction.hpp"
#include "diba/core/tuple.hpp"

namespace diba::punits {

/// Conjunction of atoms; field indexes refer to the tuple's layout. Empty means true.
struct Predicate {
  std::vector<Atom> atoms;

  bool matches(const Tuple& t) const;
};

/// Selection: END always passes, data tuples pass when the predicate holds.
std::optional<Tuple> selection_process(const Tuple& t, const Predicate& p);

}  // namespace diba::punits
