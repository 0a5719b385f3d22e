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

#include "diba/engine/engine.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <random>
#include <string_view>

#include "diba/core/error.hpp"

namespace diba::engine {

std::uint64_t cycle_cap_from_env() {
  const char* v = std::getenv("DIBA_CYCLE_CAP");
  if (v == nullptr || *v == '\0') return kDefaultCycleCap;
  std::uint64_t cap = 0;
  const std::string_view s(v);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
  if (ec != std::errc{} || p != s.data() + s.size() || cap == 0)
    throw ConfigError(fmt::format("DIBA_CYCLE_CAP='{}' is not a positive integer", s));
  return cap;
}

const QueryOutput& RunResult::output(const std::string& query) const {
  for (const auto& o : outputs)
    if (o.binding.query == query) return o;
  throw ConfigError(fmt::format("no output for query '{}'", query));
}

std::vector<std::uint8_t> interleave(std::span<const std::size_t> sizes, std::uint64_t seed) {
  if (sizes.size() > 255) throw ConfigError("too many sources");
  std::vector<std::size_t> left(sizes.begin(), sizes.end());
  std::uint64_t total = 0;
  for (auto s : left) total += s;
  std::vector<std::uint8_t> order;
  order.reserve(total);
  std::mt19937_64 rng(seed);
  while (total > 0) {
    std::uint64_t pick = rng() % total;
    std::size_t i = 0;
    while (pick >= left[i]) pick -= left[i++];
    --left[i];
    --total;
    order.push_back(static_cast<std::uint8_t>(i));
  }
  return order;
}

namespace {

void enqueue(topology::TopologyInstance& inst, const Tuple& t, const TupleLayout& layout) {
  const auto segs = encode_tuple(t, layout);
  for (std::size_t i = 0; i < segs.size(); ++i) inst.injector().enqueue(noc::Flit{segs[i], i + 1 == segs.size()});
}

}  // namespace

RunResult run(topology::TopologyInstance& inst, std::span<const StreamSource> sources, const RunOptions& opt) {
  if (opt.cost) inst.set_cost_model(*opt.cost);
  if (!inst.quiescent()) throw SimulationFault("instance is not quiescent before the run");
  if (inst.deployments().empty()) throw ConfigError("no query is deployed on this topology");

  // Every source must be a stream some deployment expects, with its layout.
  std::vector<bool> active(inst.deployments().size(), false);
  for (const auto& s : sources) {
    bool known = false;
    for (std::size_t d = 0; d < inst.deployments().size(); ++d)
      for (const auto& b : inst.deployments()[d].sources)
        if (b.stream == s.stream) {
          if (!(b.layout == s.layout))
            throw ConfigError(fmt::format("source '{}' layout differs from what '{}' expects", s.name,
                                          inst.deployments()[d].query));
          known = true;
          active[d] = true;
        }
    if (!known) throw ConfigError(fmt::format("source '{}' (stream {}) is not routed", s.name, s.stream.value));
    for (const auto& t : s.tuples)
      if (t.stream != s.stream) throw ConfigError(fmt::format("source '{}' holds a tuple of stream {}", s.name, t.stream.value));
  }

  RunResult res;
  std::vector<std::size_t> sizes;
  for (const auto& s : sources) sizes.push_back(s.tuples.size());
  res.interleaving = interleave(sizes, opt.seed);
  std::vector<std::size_t> next(sources.size(), 0);
  for (auto i : res.interleaving) enqueue(inst, sources[i].tuples[next[i]++], sources[i].layout);
  enqueue(inst, make_end(), end_layout());
  res.tuples_injected = res.interleaving.size();

  // Join units provide the occupancy series.
  std::vector<topology::SlotHost*> joins;
  for (const auto& d : inst.deployments())
    for (const auto& p : d.placements)
      if (auto* h = inst.host(p.slot); h != nullptr && !h->unit().index_names().empty()) joins.push_back(h);
  res.index_names = {"lorderkey", "oorderkey", "ccust", "ocust"};
  topology::SlotHost* join = nullptr;
  for (auto* h : joins)
    for (std::size_t d = 0; d < inst.deployments().size(); ++d)
      for (const auto& p : inst.deployments()[d].placements)
        if (active[d] && join == nullptr && inst.host(p.slot) == h) join = h;
  if (join != nullptr) res.index_names = join->unit().index_names();
  if (opt.trace_join && join != nullptr)
    join->set_observer([&res](const Tuple& t) { res.join_arrivals.push_back(t); });

  MetricsRecorder metrics(opt.bucket_cycles, res.index_names.size());
  std::vector<std::size_t> occ(res.index_names.size(), 0);
  auto sample = [&] {
    if (join != nullptr) join->unit().overflow_occupancy(occ);
  };
  std::uint64_t join_base = join != nullptr ? join->tuples_processed() : 0;
  std::uint64_t next_checkpoint = opt.checkpoint_every;

  inst.sink().clear();
  const std::uint64_t start = inst.cycle();
  try {
    while (true) {
      const bool moved = inst.step();
      sample();
      metrics.record(1, inst.injector().take_tuple_count(), occ);
      if (opt.checkpoint_every > 0 && join != nullptr) {
        while (join->tuples_processed() - join_base >= next_checkpoint) {
          res.checkpoints.push_back({next_checkpoint, inst.cycle() - start, occ});
          next_checkpoint += opt.checkpoint_every;
        }
      }
      if (inst.cycle() - start >= opt.cycle_cap)
        throw SimulationFault(fmt::format("cycle cap of {} exceeded", opt.cycle_cap));
      if (moved) continue;
      if (inst.quiescent()) break;
      const std::uint64_t cd = inst.countdown();
      if (cd == 0) throw SimulationFault(fmt::format("deadlock at cycle {}", inst.cycle() - start));
      if (opt.fast_forward && cd > 1) {
        const std::uint64_t k =
            std::min({cd - 1, metrics.cycles_to_boundary(), opt.cycle_cap - (inst.cycle() - start)});
        inst.skip(k);
        metrics.record(k, 0, occ);
      }
    }
  } catch (...) {
    if (join != nullptr) join->set_observer(nullptr);
    throw;
  }
  if (join != nullptr) join->set_observer(nullptr);
  res.total_cycles = inst.cycle() - start;
  res.buckets = metrics.finish();

  // Decode sink traffic per output binding.
  std::map<std::size_t, std::vector<std::vector<Segment>>> by_port;
  for (std::size_t p = 0; p < inst.sink().ports(); ++p) by_port[p] = inst.sink().take(p);
  for (const auto& d : inst.deployments()) res.outputs.push_back(QueryOutput{d.output, {}, 0});
  for (auto& [port, msgs] : by_port) {
    for (const auto& m : msgs) {
      const StreamId tag = m.front().tag();
      bool claimed = false;
      for (auto& o : res.outputs) {
        if (o.binding.sink_port != port) continue;
        if (tag == streams::kEnd) {
          ++o.ends;
          claimed = true;
        } else if (tag == o.binding.stream) {
          o.tuples.push_back(decode_tuple(m, o.binding.layout));
          claimed = true;
          break;
        }
      }
      if (!claimed && tag != streams::kEnd)
        throw SimulationFault(fmt::format("unexpected stream {} at sink port {}", tag.value, port));
    }
  }
  for (std::size_t d = 0; d < res.outputs.size(); ++d)
    if (active[d] && res.outputs[d].ends == 0)
      throw SimulationFault(fmt::format("END never reached the output of '{}'", res.outputs[d].binding.query));
  return res;
}

std::vector<RunResult> run_repeated(topology::TopologyInstance& instance, std::span<const StreamSource> sources,
                                    const RunOptions& options, std::size_t times) {
  std::vector<RunResult> out;
  for (std::size_t i = 0; i < times; ++i) out.push_back(run(instance, sources, options));
  return out;
}

}  // namespace diba::engine
