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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diba/core/tuple.hpp"
#include "diba/engine/cost_model.hpp"
#include "diba/engine/metrics.hpp"
#include "diba/topology/instance.hpp"

namespace diba::engine {

/// One input table, already decomposed into tuples of its stream.
struct StreamSource {
  std::string name;
  StreamId stream;
  TupleLayout layout;
  std::vector<Tuple> tuples;
};

inline constexpr std::uint64_t kDefaultCycleCap = 10'000'000'000ull;

struct RunOptions {
  std::uint64_t seed = 0xD1BA;
  std::uint64_t bucket_cycles = 100'000;
  std::uint64_t cycle_cap = kDefaultCycleCap;
  /// Record join-state occupancy every this many tuples processed by the join; 0 disables.
  std::uint64_t checkpoint_every = 0;
  /// Keep every tuple the join unit receives, in arrival order.
  bool trace_join = false;
  /// Skip runs of idle cycles; results are identical either way.
  bool fast_forward = true;
  std::optional<CostModel> cost;
};

/// Reads DIBA_CYCLE_CAP, falling back to kDefaultCycleCap.
std::uint64_t cycle_cap_from_env();

struct QueryOutput {
  topology::OutputBinding binding;
  std::vector<Tuple> tuples;
  std::size_t ends = 0;
};

struct Checkpoint {
  std::uint64_t join_tuples = 0;
  std::uint64_t cycle = 0;
  std::vector<std::size_t> occupancy;
};

struct RunResult {
  std::vector<QueryOutput> outputs;  // deployment order
  std::uint64_t total_cycles = 0;
  std::uint64_t tuples_injected = 0;
  std::vector<std::string> index_names;
  std::vector<BucketRow> buckets;
  std::vector<Checkpoint> checkpoints;
  std::vector<std::uint8_t> interleaving;  // source position per injected tuple
  std::vector<Tuple> join_arrivals;

  const QueryOutput& output(const std::string& query) const;
};

/// Weighted random merge: each step draws rng() % remaining and takes from
/// the source owning that slot, so larger remainders are picked more often.
std::vector<std::uint8_t> interleave(std::span<const std::size_t> sizes, std::uint64_t seed);

/// Streams the sources (interleaved, then one END) into the instance and
/// steps until it is quiescent. Outputs are decoded per deployed query.
RunResult run(topology::TopologyInstance& instance, std::span<const StreamSource> sources,
              const RunOptions& options = {});

/// run() `times` times on the same instance.
std::vector<RunResult> run_repeated(topology::TopologyInstance& instance, std::span<const StreamSource> sources,
                                    const RunOptions& options, std::size_t times);

}  // namespace diba::engine
