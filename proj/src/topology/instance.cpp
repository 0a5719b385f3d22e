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

#include "diba/topology/instance.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <map>

#include "diba/core/error.hpp"

namespace diba::topology {

std::string to_string(const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::kEntry: return "entry";
    case Endpoint::Kind::kSlot: return fmt::format("slot({},{},{})", e.slot.row, e.slot.col, e.slot.slot);
    case Endpoint::Kind::kSink: return fmt::format("sink[{}]", e.port);
  }
  return "?";
}

namespace {

std::string gs_name(std::size_t r, std::size_t c) { return fmt::format("G({},{})", r, c); }
std::string ls_name(std::size_t r, std::size_t c) { return fmt::format("L({},{})", r, c); }
std::string co_name(std::size_t r, std::size_t c) { return fmt::format("C({},{})", r, c); }
std::string sl_name(std::size_t r, std::size_t c, std::size_t i) { return fmt::format("S({},{},{})", r, c, i); }

}  // namespace

TopologyInstance::TopologyInstance(TopologyMatrix matrix, const UnitLibrary& lib, BuildOptions options)
    : matrix_(std::move(matrix)), options_(options), cost_(std::make_unique<CostModel>(options.cost)) {
  matrix_.validate(lib);
  options_.cost.validate();
  options_.join.validate();
  const std::size_t R = matrix_.rows, C = matrix_.cols;

  // Block ids: breadth-first from G(0,0), south before east, slots in order.
  enum class Kind { kG, kL, kS, kC };
  struct Node {
    Kind kind;
    std::size_t r, c, i;
  };
  std::map<std::tuple<int, std::size_t, std::size_t, std::size_t>, std::uint16_t> ids;
  auto key = [](const Node& n) { return std::tuple{static_cast<int>(n.kind), n.r, n.c, n.i}; };
  std::deque<Node> queue{{Kind::kG, 0, 0, 0}};
  ids[key(queue.front())] = 0;
  while (!queue.empty()) {
    const Node n = queue.front();
    queue.pop_front();
    std::vector<Node> next;
    switch (n.kind) {
      case Kind::kG:
        if (n.r < R) next.push_back({Kind::kL, n.r, n.c, 0});
        if (n.c + 1 < C) next.push_back({Kind::kG, n.r, n.c + 1, 0});
        break;
      case Kind::kL:
        for (std::size_t i = 0; i < matrix_.brick(n.r, n.c).size(); ++i) next.push_back({Kind::kS, n.r, n.c, i});
        break;
      case Kind::kS: next.push_back({Kind::kC, n.r, n.c, 0}); break;
      case Kind::kC: next.push_back({Kind::kG, n.r + 1, n.c, 0}); break;
    }
    for (const auto& m : next) {
      if (ids.count(key(m))) continue;
      if (ids.size() > kMaxBlockId) throw ConfigError("topology needs more than 4096 block ids");
      ids[key(m)] = static_cast<std::uint16_t>(ids.size());
      queue.push_back(m);
    }
  }
  names_.resize(ids.size());
  auto id_of = [&](Kind k, std::size_t r, std::size_t c, std::size_t i = 0) {
    const std::uint16_t v = ids.at(std::tuple{static_cast<int>(k), r, c, i});
    switch (k) {
      case Kind::kG: names_[v] = gs_name(r, c); break;
      case Kind::kL: names_[v] = ls_name(r, c); break;
      case Kind::kS: names_[v] = sl_name(r, c, i); break;
      case Kind::kC: names_[v] = co_name(r, c); break;
    }
    return BlockId{v};
  };

  injector_ = std::make_unique<noc::Injector>();
  sink_ = std::make_unique<noc::Sink>(sink_ports());
  for (std::size_t r = 0; r <= R; ++r)
    for (std::size_t c = 0; c < C; ++c) gswitches_.push_back(std::make_unique<noc::GSwitchA>(id_of(Kind::kG, r, c)));

  UnitContext ctx{options_.join};
  const std::uint32_t ni = cost_->ni_cycles_per_flit();
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) {
      const auto& kinds = matrix_.brick(r, c);
      Brick b;
      b.lswitch = std::make_unique<noc::LSwitch>(id_of(Kind::kL, r, c), kinds.size());
      b.collector = std::make_unique<noc::Collector>(id_of(Kind::kC, r, c), kinds.size());
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        Slot s{kinds[i], id_of(Kind::kS, r, c, i), nullptr, nullptr};
        auto* in = link(ls_name(r, c), sl_name(r, c, i), ni);
        auto* out = link(sl_name(r, c, i), co_name(r, c), ni);
        b.lswitch->connect_output(i, in);
        b.collector->connect_input(i, out);
        if (kinds[i] == kBypass) {
          s.bypass = std::make_unique<BypassSlot>(s.id);
          s.bypass->connect_input(in);
          s.bypass->connect_output(out);
        } else {
          s.host = std::make_unique<SlotHost>(s.id, lib.make(kinds[i], ctx), cost_.get());
          s.host->connect_input(in);
          s.host->connect_output(out);
        }
        b.slots.push_back(std::move(s));
      }
      bricks_.push_back(std::move(b));
    }
  }

  // Global wiring.
  auto* entry = link("entry", gs_name(0, 0));
  injector_->connect_output(entry);
  gswitch(0, 0).connect_input(noc::GSwitchA::kWest, entry);
  for (std::size_t r = 0; r <= R; ++r) {
    for (std::size_t c = 0; c < C; ++c) {
      auto& g = gswitch(r, c);
      if (r < R) {
        auto* l = link(gs_name(r, c), ls_name(r, c));
        g.connect_output(noc::GSwitchA::kSouth, l);
        bricks_[r * C + c].lswitch->connect_input(l);
        auto* up = link(co_name(r, c), gs_name(r + 1, c));
        bricks_[r * C + c].collector->connect_output(up);
        gswitch(r + 1, c).connect_input(noc::GSwitchA::kNorth, up);
      } else {
        auto* l = link(gs_name(r, c), fmt::format("sink[{}]", c));
        g.connect_output(noc::GSwitchA::kSouth, l);
        sink_->connect_input(c, l);
      }
      if (c + 1 < C) {
        auto* l = link(gs_name(r, c), gs_name(r, c + 1));
        g.connect_output(noc::GSwitchA::kEast, l);
        gswitch(r, c + 1).connect_input(noc::GSwitchA::kWest, l);
      } else {
        auto* l = link(gs_name(r, c), fmt::format("sink[{}]", C + r));
        g.connect_output(noc::GSwitchA::kEast, l);
        sink_->connect_input(C + r, l);
      }
      // Instruction fan-out: never toward the sink; row 0 carries the trunk,
      // lower rows receive programs from the brick above.
      const std::uint8_t south = r < R ? 0x1 : 0x0;
      const std::uint8_t east = c + 1 < C ? 0x2 : 0x0;
      g.set_instruction_fanout(noc::GSwitchA::kWest, r == 0 ? static_cast<std::uint8_t>(south | east) : 0);
      g.set_instruction_fanout(noc::GSwitchA::kNorth, south);
    }
  }

  order_.push_back(injector_.get());
  for (auto& g : gswitches_) order_.push_back(g.get());
  for (auto& b : bricks_) order_.push_back(b.lswitch.get());
  for (auto& b : bricks_)
    for (auto& s : b.slots) order_.push_back(s.host ? static_cast<noc::Block*>(s.host.get()) : s.bypass.get());
  for (auto& b : bricks_) order_.push_back(b.collector.get());
  order_.push_back(sink_.get());
}

TopologyInstance::TopologyInstance(TopologyInstance&&) noexcept = default;
TopologyInstance& TopologyInstance::operator=(TopologyInstance&&) noexcept = default;
TopologyInstance::~TopologyInstance() = default;

noc::BoundedBuffer* TopologyInstance::link(const std::string& from, const std::string& to,
                                           std::uint32_t cycles_per_flit) {
  links_.push_back(std::make_unique<noc::BoundedBuffer>(options_.buffer_capacity, cycles_per_flit));
  edges_.push_back(Edge{from, to});
  return links_.back().get();
}

noc::GSwitchA& TopologyInstance::gswitch(std::size_t r, std::size_t c) {
  if (r > rows() || c >= cols()) throw ConfigError(fmt::format("no GSwitch at ({}, {})", r, c));
  return *gswitches_[r * cols() + c];
}

const noc::GSwitchA& TopologyInstance::gswitch(std::size_t r, std::size_t c) const {
  return const_cast<TopologyInstance*>(this)->gswitch(r, c);
}

noc::LSwitch& TopologyInstance::lswitch(std::size_t r, std::size_t c) {
  if (r >= rows() || c >= cols()) throw ConfigError(fmt::format("no brick at ({}, {})", r, c));
  return *bricks_[r * cols() + c].lswitch;
}

const noc::LSwitch& TopologyInstance::lswitch(std::size_t r, std::size_t c) const {
  return const_cast<TopologyInstance*>(this)->lswitch(r, c);
}

std::size_t TopologyInstance::slot_count(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols()) throw ConfigError(fmt::format("no brick at ({}, {})", r, c));
  return bricks_[r * cols() + c].slots.size();
}

const TopologyInstance::Slot& TopologyInstance::slot_at(const SlotAddress& a) const {
  if (a.row >= rows() || a.col >= cols() || a.slot >= bricks_[a.row * cols() + a.col].slots.size())
    throw ConfigError(fmt::format("no slot at ({}, {}, {})", a.row, a.col, a.slot));
  return bricks_[a.row * cols() + a.col].slots[a.slot];
}

const std::string& TopologyInstance::slot_kind(const SlotAddress& a) const { return slot_at(a).kind; }
BlockId TopologyInstance::slot_block(const SlotAddress& a) const { return slot_at(a).id; }
SlotHost* TopologyInstance::host(const SlotAddress& a) { return slot_at(a).host.get(); }
const SlotHost* TopologyInstance::host(const SlotAddress& a) const { return slot_at(a).host.get(); }

std::vector<SlotAddress> TopologyInstance::slots() const {
  std::vector<SlotAddress> out;
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      for (std::size_t i = 0; i < slot_count(r, c); ++i) out.push_back({r, c, i});
  std::sort(out.begin(), out.end(),
            [&](const SlotAddress& a, const SlotAddress& b) { return slot_block(a) < slot_block(b); });
  return out;
}

bool TopologyInstance::has_block(BlockId id) const { return id.value < names_.size(); }

std::string TopologyInstance::block_name(BlockId id) const {
  if (!has_block(id)) throw ConfigError(fmt::format("no block {}", id.value));
  return names_[id.value];
}

std::vector<TopologyInstance::Edge> TopologyInstance::wiring() const { return edges_; }

bool TopologyInstance::acyclic() const {
  std::map<std::string, std::vector<std::string>> adj;
  std::map<std::string, int> indegree;
  for (const auto& e : edges_) {
    adj[e.from].push_back(e.to);
    indegree[e.to] += 1;
    indegree.try_emplace(e.from, 0);
  }
  std::deque<std::string> ready;
  for (const auto& [n, d] : indegree)
    if (d == 0) ready.push_back(n);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const auto n = ready.front();
    ready.pop_front();
    ++seen;
    for (const auto& m : adj[n])
      if (--indegree[m] == 0) ready.push_back(m);
  }
  return seen == indegree.size();
}

bool TopologyInstance::step() {
  bool active = false;
  for (auto* b : order_) active |= b->step();
  for (auto& l : links_) active |= l->commit();
  ++cycle_;
  return active;
}

std::uint64_t TopologyInstance::countdown() const {
  std::uint64_t best = 0;
  auto consider = [&](std::uint64_t v) {
    if (v > 0 && (best == 0 || v < best)) best = v;
  };
  for (auto* b : order_) consider(b->countdown());
  for (const auto& l : links_) consider(l->cooldown() + 1);
  return best;
}

void TopologyInstance::skip(std::uint64_t cycles) {
  for (auto* b : order_)
    if (b->countdown() > 0) b->skip(cycles);
  for (auto& l : links_) l->skip(cycles);
  cycle_ += cycles;
}

bool TopologyInstance::quiescent() const {
  for (const auto* b : order_)
    if (!b->idle()) return false;
  for (const auto& l : links_)
    if (!l->drained()) return false;
  return true;
}

void TopologyInstance::drain(std::uint64_t cap) {
  const std::uint64_t start = cycle_;
  while (!quiescent()) {
    if (cycle_ - start > cap) throw SimulationFault(fmt::format("no quiescence within {} cycles", cap));
    step();
  }
}

void TopologyInstance::set_cost_model(const CostModel& cost) {
  cost.validate();
  if (cost.ni_lanes != cost_->ni_lanes) throw ConfigError("NI lane count is fixed when the topology is built");
  *cost_ = cost;
  options_.cost = cost;
}

}  // namespace diba::topology
