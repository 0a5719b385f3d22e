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

#include "diba/punits/top_k.hpp"

namespace diba::punits {

TopK::TopK(std::vector<SortKey> keys, std::size_t limit) : keys_(std::move(keys)), limit_(limit) {}

bool TopK::before(const Tuple& a, const Tuple& b) const {
  for (const auto& k : keys_) {
    const auto x = a.values.at(k.field);
    const auto y = b.values.at(k.field);
    if (x != y) return k.descending ? x > y : x < y;
  }
  return false;
}

std::vector<Tuple> TopK::step(const Tuple& t, std::uint64_t* comparisons) {
  std::vector<Tuple> out;
  if (t.stream == streams::kEnd) {
    out = std::move(sorted_);
    sorted_.clear();
    out.push_back(t);
    return out;
  }
  std::uint64_t cmp = 0;
  std::size_t pos = sorted_.size();
  while (pos > 0) {
    ++cmp;
    if (!before(t, sorted_[pos - 1])) break;
    --pos;
  }
  if (limit_ == 0 || pos < limit_) {
    sorted_.insert(sorted_.begin() + static_cast<std::ptrdiff_t>(pos), t);
    if (limit_ != 0 && sorted_.size() > limit_) sorted_.pop_back();
  }
  if (comparisons != nullptr) *comparisons += cmp;
  return out;
}

}  // namespace diba::punits
