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
#include <deque>
#include <optional>
#include <vector>

#include "diba/core/tuple.hpp"

namespace diba::punits {

/// Merges per-port streams that are each sorted on `key_field` into one
/// sorted stream. A tuple is released only once every open port has a head
/// to compare against; END closes a port. Ties go to the lower port.
class Synchronizer {
 public:
  Synchronizer(std::size_t ports, std::size_t key_field);

  void push(std::size_t port, Tuple t);
  std::optional<Tuple> pop();
  /// All ports closed and drained.
  bool done() const;

 private:
  std::size_t key_;
  std::vector<std::deque<Tuple>> queues_;
  std::vector<bool> closed_;
};

/// Two-way merge of pre-sorted inputs; ties take from `a` first.
std::vector<Tuple> sync_merge(const std::vector<Tuple>& a, const std::vector<Tuple>& b, std::size_t key_field);

}  // namespace diba::punits
