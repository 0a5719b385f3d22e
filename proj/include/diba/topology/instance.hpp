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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "diba/engine/cost_model.hpp"
#include "diba/join/hbsj.hpp"
#include "diba/noc/buffer.hpp"
#include "diba/noc/collector.hpp"
#include "diba/noc/endpoints.hpp"
#include "diba/noc/gswitch_a.hpp"
#include "diba/noc/lswitch.hpp"
#include "diba/topology/matrix.hpp"
#include "diba/topology/slot_host.hpp"
#include "diba/topology/unit_library.hpp"

namespace diba::topology {

struct SlotAddress {
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t slot = 0;

  auto operator<=>(const SlotAddress&) const = default;
};

/// A place a stream can start or end: the input port, a slot or a sink port.
struct Endpoint {
  enum class Kind : std::uint8_t { kEntry, kSlot, kSink };
  Kind kind = Kind::kEntry;
  SlotAddress slot;
  std::size_t port = 0;

  static Endpoint entry() { return {}; }
  static Endpoint at(SlotAddress a) { return {Kind::kSlot, a, 0}; }
  static Endpoint sink(std::size_t p) { return {Kind::kSink, {}, p}; }
  auto operator<=>(const Endpoint&) const = default;
};

std::string to_string(const Endpoint& e);

struct Placement {
  std::string op_id;
  std::string kind;
  SlotAddress slot;
  BlockId b_id;
};

/// Where and how a query's results leave the topology.
struct OutputBinding {
  std::string query;
  std::string op_id;
  std::size_t sink_port = 0;
  StreamId stream;
  TupleLayout layout;
};

/// A producer's stream and the exact set of endpoints it must reach.
struct Flow {
  Endpoint producer;
  StreamId stream;
  std::vector<Endpoint> destinations;  // sorted
};

struct SourceBinding {
  std::string name;
  StreamId stream;
  TupleLayout layout;
};

struct Deployment {
  std::string query;
  std::vector<SourceBinding> sources;
  std::vector<Placement> placements;
  OutputBinding output;
  std::vector<Flow> flows;
};

struct BuildOptions {
  std::size_t buffer_capacity = noc::BoundedBuffer::kDefaultCapacity;
  CostModel cost;
  join::HbsjConfig join;
};

/// A built grid: (R+1) x C GSwitch-A units with brick (r, c) between
/// GSwitch(r, c).south and GSwitch(r+1, c).north, and GSwitch(r, c).east
/// feeding GSwitch(r, c+1).west. Input enters GSwitch(0, 0).west. Sink
/// ports 0..C-1 take the last row's south outputs, ports C..C+R the last
/// column's east outputs.
///
/// Programs travel east along row 0 and then down each column through the
/// bricks' BYPASS slots, so every switch and brick sees each instruction once.
class TopologyInstance {
 public:
  TopologyInstance(TopologyMatrix matrix, const UnitLibrary& lib, BuildOptions options = {});
  TopologyInstance(TopologyInstance&&) noexcept;
  TopologyInstance& operator=(TopologyInstance&&) noexcept;
  ~TopologyInstance();

  const TopologyMatrix& matrix() const { return matrix_; }
  const BuildOptions& options() const { return options_; }
  std::size_t rows() const { return matrix_.rows; }
  std::size_t cols() const { return matrix_.cols; }

  noc::GSwitchA& gswitch(std::size_t r, std::size_t c);
  const noc::GSwitchA& gswitch(std::size_t r, std::size_t c) const;
  noc::LSwitch& lswitch(std::size_t r, std::size_t c);
  const noc::LSwitch& lswitch(std::size_t r, std::size_t c) const;
  std::size_t slot_count(std::size_t r, std::size_t c) const;
  const std::string& slot_kind(const SlotAddress& a) const;
  BlockId slot_block(const SlotAddress& a) const;
  /// nullptr for BYPASS slots.
  SlotHost* host(const SlotAddress& a);
  const SlotHost* host(const SlotAddress& a) const;
  /// Every slot, in block-id order.
  std::vector<SlotAddress> slots() const;

  std::size_t sink_ports() const { return matrix_.cols + matrix_.rows + 1; }
  noc::Injector& injector() { return *injector_; }
  noc::Sink& sink() { return *sink_; }
  const noc::Sink& sink() const { return *sink_; }

  bool has_block(BlockId id) const;
  std::string block_name(BlockId id) const;
  std::size_t block_count() const { return names_.size(); }

  struct Edge {
    std::string from;
    std::string to;
  };
  std::vector<Edge> wiring() const;
  bool acyclic() const;

  /// One clock cycle over every block, then link commit. Returns true if anything moved.
  bool step();
  std::uint64_t cycle() const { return cycle_; }
  /// Shortest pure-wait countdown among blocks and links; 0 if nothing is counting down.
  std::uint64_t countdown() const;
  /// Fast-forward idle cycles; callers pass fewer than countdown().
  void skip(std::uint64_t cycles);
  bool quiescent() const;
  /// Steps until quiescent; throws SimulationFault past `cap` cycles.
  void drain(std::uint64_t cap);

  void set_cost_model(const CostModel& cost);
  const CostModel& cost() const { return *cost_; }

  std::vector<Deployment>& deployments() { return deployments_; }
  const std::vector<Deployment>& deployments() const { return deployments_; }

 private:
  struct Slot {
    std::string kind;
    BlockId id;
    std::unique_ptr<SlotHost> host;
    std::unique_ptr<BypassSlot> bypass;
  };
  struct Brick {
    std::unique_ptr<noc::LSwitch> lswitch;
    std::unique_ptr<noc::Collector> collector;
    std::vector<Slot> slots;
  };

  noc::BoundedBuffer* link(const std::string& from, const std::string& to, std::uint32_t cycles_per_flit = 1);
  const Slot& slot_at(const SlotAddress& a) const;

  TopologyMatrix matrix_;
  BuildOptions options_;
  std::unique_ptr<CostModel> cost_;
  std::vector<std::unique_ptr<noc::GSwitchA>> gswitches_;  // (R+1) x C, row-major
  std::vector<Brick> bricks_;                              // R x C
  std::unique_ptr<noc::Injector> injector_;
  std::unique_ptr<noc::Sink> sink_;
  std::vector<std::unique_ptr<noc::BoundedBuffer>> links_;
  std::vector<Edge> edges_;
  std::vector<noc::Block*> order_;
  std::vector<std::string> names_;  // by block id
  std::uint64_t cycle_ = 0;
  std::vector<Deployment> deployments_;
};

}  // namespace diba::topology
