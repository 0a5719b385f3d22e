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
#include <cstdint>
#include <vector>

#include "diba/core/tuple.hpp"

namespace diba::punits {

struct SortKey {
  std::size_t field = 0;
  bool descending = false;
};

/// Keeps the first `limit` tuples under the sort keys (0 = unlimited),
/// inserting each arrival by a bubble walk from the tail. Equal keys keep
/// arrival order. END emits the buffer followed by END and resets.
class TopK {
 public:
  TopK(std::vector<SortKey> keys, std::size_t limit);

  /// `comparisons` accumulates the number of key comparisons performed.
  std::vector<Tuple> step(const Tuple& t, std::uint64_t* comparisons = nullptr);
  void set_limit(std::size_t limit) { limit_ = limit; }
  std::size_t limit() const { return limit_; }
  std::size_t size() const { return sorted_.size(); }

 private:
  bool before(const Tuple& a, const Tuple& b) const;

  std::vector<SortKey> keys_;
  std::size_t limit_;
  std::vector<Tuple> sorted_;
};

}  // namespace diba::punits
