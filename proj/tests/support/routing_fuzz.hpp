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

// Random grids, random multicast routes, random traffic. Routes are computed
// here from the grid shape alone and installed by sending switch
// instructions through the network, then every tap slot's log is compared
// with what it should have received.

#include <fmt/format.h>

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "diba/core/error.hpp"
#include "diba/core/instruction.hpp"
#include "diba/core/tuple.hpp"
#include "diba/punits/units.hpp"
#include "diba/topology/instance.hpp"

namespace diba::testing {

struct FuzzOutcome {
  bool ok = true;
  std::string failure;
  std::size_t tuples = 0;
  std::size_t deliveries = 0;
};

inline FuzzOutcome run_routing_fuzz(std::uint64_t seed) {
  using topology::SlotAddress;
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
  FuzzOutcome res;

  const std::vector<StreamId> data_streams{streams::kLineitem, streams::kOrders, streams::kCustomer, streams::kResult};
  std::map<StreamId, TupleLayout> layouts;
  for (auto s : data_streams) {
    std::vector<Field> fields;
    const auto segs = pick(1, 3);
    for (std::size_t i = 0; i < segs; ++i) fields.push_back({fmt::format("w{}", i), 61});
    layouts[s] = TupleLayout(fmt::format("fuzz{}", s.value), fields);
  }

  struct Tap {
    const punits::ProcessingUnit* unit;
    std::shared_ptr<punits::CaptureUnit::Log> log;
  };
  auto taps = std::make_shared<std::vector<Tap>>();
  topology::UnitLibrary lib;
  const std::uint32_t max_stall = static_cast<std::uint32_t>(pick(0, 3));
  lib.add("TAP", [&, taps](const topology::UnitContext&) {
    auto log = std::make_shared<punits::CaptureUnit::Log>();
    auto u = std::make_unique<punits::CaptureUnit>(layouts, log, max_stall, rng());
    taps->push_back({u.get(), log});
    return u;
  });

  topology::TopologyMatrix m;
  m.rows = pick(1, 4);
  m.cols = pick(1, 4);
  m.slots_per_brick = 4;
  for (std::size_t b = 0; b < m.rows * m.cols; ++b) {
    std::vector<std::string> kinds(pick(1, 4), "TAP");
    kinds[rng() % kinds.size()] = topology::kBypass;
    m.bricks.push_back(kinds);
  }
  topology::BuildOptions opts;
  opts.buffer_capacity = std::vector<std::size_t>{2, 4, 16}[rng() % 3];
  topology::TopologyInstance inst(m, lib, opts);

  std::vector<SlotAddress> tap_slots;
  for (const auto& a : inst.slots())
    if (inst.slot_kind(a) == "TAP") tap_slots.push_back(a);
  auto log_of = [&](const SlotAddress& a) {
    for (const auto& t : *taps)
      if (t.unit == &inst.host(a)->unit()) return t.log;
    throw ConfigError("tap without a log");
  };

  // Destinations per stream and the switch entries that realise them:
  // east along row 0, then south through the BYPASS of each brick above.
  std::map<StreamId, std::vector<SlotAddress>> dests;
  std::map<std::pair<std::uint16_t, StreamId>, NocInstruction> entries;
  auto add = [&](SwitchKind k, BlockId id, StreamId s, std::uint8_t mask, std::uint8_t segs) {
    auto [it, fresh] = entries.try_emplace({id.value, s}, NocInstruction{k, id, s, mask, segs});
    if (!fresh) it->second.mask = static_cast<std::uint8_t>(it->second.mask | mask);
  };
  auto bypass_bit = [&](std::size_t r, std::size_t c) {
    const auto& kinds = m.brick(r, c);
    for (std::size_t i = 0; i < kinds.size(); ++i)
      if (kinds[i] == topology::kBypass) return static_cast<std::uint8_t>(1u << i);
    return std::uint8_t{0};
  };
  for (auto s : data_streams) {
    const auto segs = static_cast<std::uint8_t>(layouts[s].segment_count());
    for (const auto& a : tap_slots) {
      if (rng() % 2) continue;
      dests[s].push_back(a);
      for (std::size_t c = 0; c < a.col; ++c) add(SwitchKind::kGSwitchA, inst.gswitch(0, c).id(), s, 0x2, segs);
      for (std::size_t r = 0; r < a.row; ++r) {
        add(SwitchKind::kGSwitchA, inst.gswitch(r, a.col).id(), s, 0x1, segs);
        add(SwitchKind::kLSwitch, inst.lswitch(r, a.col).id(), s, bypass_bit(r, a.col), 0);
      }
      add(SwitchKind::kGSwitchA, inst.gswitch(a.row, a.col).id(), s, 0x1, segs);
      add(SwitchKind::kLSwitch, inst.lswitch(a.row, a.col).id(), s, static_cast<std::uint8_t>(1u << a.slot), 0);
    }
  }

  std::vector<StreamId> live;
  for (const auto& [s, d] : dests)
    if (!d.empty()) live.push_back(s);

  try {
    std::vector<NocInstruction> program;
    for (const auto& [k, in] : entries) program.push_back(in);
    std::shuffle(program.begin(), program.end(), rng);
    for (const auto& in : program) inst.injector().enqueue({encode_noc_instruction(in), true});
    inst.drain(1'000'000);

    std::map<StreamId, std::vector<Tuple>> sent;
    if (!live.empty()) {
      const auto n = pick(50, 400);
      for (std::size_t i = 0; i < n; ++i) {
        const StreamId s = live[rng() % live.size()];
        Tuple t{s, {}};
        t.values.push_back(i);
        for (std::size_t f = 1; f < layouts[s].field_count(); ++f) t.values.push_back(rng() & Segment::kPayloadMask);
        const auto segs = encode_tuple(t, layouts[s]);
        for (std::size_t k = 0; k < segs.size(); ++k) inst.injector().enqueue({segs[k], k + 1 == segs.size()});
        sent[s].push_back(std::move(t));
        ++res.tuples;
      }
    }
    inst.drain(10'000'000);

    for (const auto& a : tap_slots) {
      const auto log = log_of(a);
      std::map<StreamId, std::vector<Tuple>> got;
      for (const auto& t : *log) got[t.stream].push_back(t);
      res.deliveries += log->size();
      for (auto s : data_streams) {
        const bool wanted = std::find(dests[s].begin(), dests[s].end(), a) != dests[s].end();
        const auto& want = wanted ? sent[s] : std::vector<Tuple>{};
        if (got[s] != want) {
          res.ok = false;
          res.failure = fmt::format("seed {}: slot ({},{},{}) stream {} got {} tuples, expected {}", seed, a.row,
                                    a.col, a.slot, s.value, got[s].size(), want.size());
          return res;
        }
      }
    }
  } catch (const Error& e) {
    res.ok = false;
    res.failure = fmt::format("seed {}: {}", seed, e.what());
  }
  return res;
}

}  // namespace diba::testing
