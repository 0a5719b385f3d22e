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

#include <cstdint>
#include <string>

#include "diba/core/stream.hpp"

namespace diba::noc {

/// Anything the cycle loop steps: switches, collectors, slot hosts, endpoints.
class Block {
 public:
  virtual ~Block() = default;

  /// One clock edge. Returns true when a flit moved or visible state changed.
  virtual bool step() = 0;
  /// True when no flit or partial work is held inside the block.
  virtual bool idle() const = 0;
  /// Cycles of pure waiting left before the block acts on its own; 0 if none.
  virtual std::uint64_t countdown() const { return 0; }
  /// Fast-forward `cycles` idle cycles; only called with cycles < countdown().
  virtual void skip(std::uint64_t /*cycles*/) {}
  virtual std::string describe() const = 0;
};

}  // namespace diba::noc
