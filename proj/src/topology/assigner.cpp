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

#include "diba/topology/assigner.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "diba/core/error.hpp"

namespace diba::topology {

namespace {

using Tables = std::map<std::uint16_t, noc::RoutingTable>;

/// Raised inside the search when a candidate placement cannot be routed.
struct Conflict {
  std::string reason;
};

constexpr std::uint8_t kSouth = 0x1;
constexpr std::uint8_t kEast = 0x2;

bool reaches(const Endpoint& from, const SlotAddress& to) {
  if (from.kind == Endpoint::Kind::kEntry) return true;
  return to.row > from.slot.row && to.col >= from.slot.col;
}

class Router {
 public:
  explicit Router(const TopologyInstance& inst) : inst_(inst) {
    for (std::size_t r = 0; r <= inst.rows(); ++r)
      for (std::size_t c = 0; c < inst.cols(); ++c) {
        const auto& g = inst.gswitch(r, c);
        tables_[g.id().value] = g.table();
        gswitch_ids_.insert(g.id().value);
      }
    for (std::size_t r = 0; r < inst.rows(); ++r)
      for (std::size_t c = 0; c < inst.cols(); ++c) tables_[inst.lswitch(r, c).id().value] = inst.lswitch(r, c).table();
  }

  const Tables& tables() const { return tables_; }
  bool is_gswitch(std::uint16_t id) const { return gswitch_ids_.count(id) > 0; }

  void route(const Endpoint& from, const Endpoint& to, StreamId s, std::uint8_t segs) {
    std::size_t r0 = 0, c0 = 0;
    if (from.kind == Endpoint::Kind::kSlot) {
      r0 = from.slot.row + 1;
      c0 = from.slot.col;
    }
    if (to.kind == Endpoint::Kind::kSink) {
      if (to.port != c0) throw Conflict{"output must leave through its own column"};
      for (std::size_t r = r0; r < inst_.rows(); ++r) {
        add_g(r, c0, s, kSouth, segs);
        add_l(r, c0, s, bypass_bit(r, c0));
      }
      add_g(inst_.rows(), c0, s, kSouth, segs);
      return;
    }
    const SlotAddress& t = to.slot;
    if (t.row < r0 || t.col < c0)
      throw Conflict{fmt::format("{} cannot reach {}", to_string(from), to_string(to))};
    for (std::size_t c = c0; c < t.col; ++c) add_g(r0, c, s, kEast, segs);
    for (std::size_t r = r0; r < t.row; ++r) {
      add_g(r, t.col, s, kSouth, segs);
      add_l(r, t.col, s, bypass_bit(r, t.col));
    }
    add_g(t.row, t.col, s, kSouth, segs);
    add_l(t.row, t.col, s, static_cast<std::uint8_t>(1u << t.slot));
  }

  /// Endpoints reached by stream `s` leaving `from`, with multiplicity.
  std::map<Endpoint, int> propagate(const Endpoint& from, StreamId s) const {
    std::map<Endpoint, int> out;
    std::function<void(std::size_t, std::size_t)> walk_g = [&](std::size_t r, std::size_t c) {
      const auto* e = tables_.at(inst_.gswitch(r, c).id().value).find(s);
      if (e == nullptr) throw Conflict{fmt::format("stream {} unrouted at G({},{})", s.value, r, c)};
      if (e->dest_mask & kSouth) {
        if (r == inst_.rows()) {
          ++out[Endpoint::sink(c)];
        } else {
          const auto* l = tables_.at(inst_.lswitch(r, c).id().value).find(s);
          if (l == nullptr) throw Conflict{fmt::format("stream {} unrouted at L({},{})", s.value, r, c)};
          for (std::size_t i = 0; i < inst_.slot_count(r, c); ++i) {
            if (!(l->dest_mask >> i & 1)) continue;
            if (inst_.slot_kind({r, c, i}) == kBypass) walk_g(r + 1, c);
            else ++out[Endpoint::at({r, c, i})];
          }
        }
      }
      if (e->dest_mask & kEast) {
        if (c + 1 == inst_.cols()) ++out[Endpoint::sink(inst_.cols() + r)];
        else walk_g(r, c + 1);
      }
    };
    if (from.kind == Endpoint::Kind::kEntry) walk_g(0, 0);
    else walk_g(from.slot.row + 1, from.slot.col);
    return out;
  }

 private:
  std::uint8_t bypass_bit(std::size_t r, std::size_t c) const {
    for (std::size_t i = 0; i < inst_.slot_count(r, c); ++i)
      if (inst_.slot_kind({r, c, i}) == kBypass) return static_cast<std::uint8_t>(1u << i);
    throw ConfigError(fmt::format("brick ({}, {}) has no BYPASS", r, c));
  }

  void merge(std::uint16_t id, StreamId s, std::uint8_t mask, std::uint8_t segs) {
    auto& t = tables_[id];
    noc::RoutingEntry e{s, segs, mask};
    if (const auto* old = t.find(s)) {
      if (old->seg_count != segs)
        throw Conflict{fmt::format("stream {} needs {} segments at block {} but already routes {}", s.value, segs, id,
                                   old->seg_count)};
      e.dest_mask = static_cast<std::uint8_t>(e.dest_mask | old->dest_mask);
    }
    t.upsert(e);
  }
  void add_g(std::size_t r, std::size_t c, StreamId s, std::uint8_t mask, std::uint8_t segs) {
    merge(inst_.gswitch(r, c).id().value, s, mask, segs);
  }
  void add_l(std::size_t r, std::size_t c, StreamId s, std::uint8_t mask) {
    merge(inst_.lswitch(r, c).id().value, s, mask, 0);
  }

  const TopologyInstance& inst_;
  Tables tables_;
  std::set<std::uint16_t> gswitch_ids_;
};

struct OpInfo {
  const PlanOperator* op;
  std::vector<Endpoint> producers;  // resolved at placement time
  std::vector<StreamId> input_streams;
};

class Search {
 public:
  Search(const QueryPlan& plan, const TopologyInstance& inst) : plan_(plan), inst_(inst) {
    for (const auto& d : inst.deployments())
      for (const auto& p : d.placements) occupied_.insert(p.slot);
    for (const auto& s : plan.sources) source_stream_[s.name] = s.stream;
    for (std::size_t i = 0; i < plan.operators.size(); ++i) op_index_[plan.operators[i].id] = i;
    slots_ = inst.slots();
  }

  InstructionProgram run() {
    chosen_.assign(plan_.operators.size(), SlotAddress{});
    if (!place(0)) {
      throw PlacementError(fmt::format("no placement of plan '{}' fits the {}x{} topology{}", plan_.name, inst_.rows(),
                                       inst_.cols(), last_reason_.empty() ? "" : ": " + last_reason_));
    }
    return std::move(*result_);
  }

 private:
  const punits::ProcessingUnit& unit_at(const SlotAddress& a) const { return inst_.host(a)->unit(); }

  Endpoint producer_of(const std::string& name) const {
    if (source_stream_.count(name)) return Endpoint::entry();
    return Endpoint::at(chosen_[op_index_.at(name)]);
  }

  bool place(std::size_t k) {
    if (k == plan_.operators.size()) {
      try {
        result_ = build();
        return true;
      } catch (const Conflict& c) {
        last_reason_ = c.reason;
        return false;
      }
    }
    if (++attempts_ > 100000) return false;
    const auto& op = plan_.operators[k];
    for (const auto& a : slots_) {
      if (inst_.slot_kind(a) != op.kind || occupied_.count(a)) continue;
      bool ok = true;
      for (const auto& in : op.inputs) ok = ok && reaches(producer_of(in), a);
      if (!ok) continue;
      occupied_.insert(a);
      chosen_[k] = a;
      const bool done = place(k + 1);
      occupied_.erase(a);
      if (done) return true;
    }
    if (last_reason_.empty()) last_reason_ = fmt::format("no free reachable '{}' slot for '{}'", op.kind, op.id);
    return false;
  }

  StreamId stream_of(const std::string& name) const {
    if (auto it = source_stream_.find(name); it != source_stream_.end()) return it->second;
    return unit_at(chosen_[op_index_.at(name)]).output_stream();
  }

  const TupleLayout& layout_of(const std::string& name, const SlotAddress& consumer) const {
    if (source_stream_.count(name)) {
      const auto* l = unit_at(consumer).input_layout(source_stream_.at(name));
      if (l == nullptr) throw ConfigError(fmt::format("unit {} does not accept source '{}'", unit_at(consumer).kind(), name));
      return *l;
    }
    return unit_at(chosen_[op_index_.at(name)]).output_layout();
  }

  InstructionProgram build() {
    InstructionProgram prog;
    Deployment& dep = prog.deployment;
    dep.query = plan_.name;
    Router router(inst_);

    // Sources.
    for (const auto& s : plan_.sources) {
      std::vector<Endpoint> dests;
      std::optional<TupleLayout> layout;
      for (std::size_t i = 0; i < plan_.operators.size(); ++i) {
        const auto& op = plan_.operators[i];
        if (std::find(op.inputs.begin(), op.inputs.end(), s.name) == op.inputs.end()) continue;
        const auto& l = layout_of(s.name, chosen_[i]);
        if (layout && !(*layout == l))
          throw ConfigError(fmt::format("consumers of source '{}' disagree on its layout", s.name));
        layout = l;
        dests.push_back(Endpoint::at(chosen_[i]));
      }
      if (dests.empty()) throw ConfigError(fmt::format("source '{}' is never read", s.name));
      for (const auto& d : inst_.deployments())
        for (const auto& old : d.sources)
          if (old.stream == s.stream && !(old.layout == *layout))
            throw Conflict{fmt::format("stream {} already carries '{}' with another layout", s.stream.value, old.name)};
      dep.sources.push_back({s.name, s.stream, *layout});
      std::sort(dests.begin(), dests.end());
      dep.flows.push_back({Endpoint::entry(), s.stream, dests});
    }

    // Operators: data and END flows to their consumers.
    std::set<Endpoint> entry_end;
    for (std::size_t i = 0; i < plan_.operators.size(); ++i) {
      const auto& op = plan_.operators[i];
      const auto& unit = unit_at(chosen_[i]);
      if (op.output_stream && *op.output_stream != unit.output_stream())
        throw ConfigError(fmt::format("operator '{}' declares stream {} but {} emits {}", op.id,
                                      op.output_stream->value, unit.kind(), unit.output_stream().value));
      for (const auto& in : op.inputs) {
        const StreamId s = stream_of(in);
        const auto* accepted = unit.input_layout(s);
        if (accepted == nullptr)
          throw ConfigError(fmt::format("unit {} for '{}' does not accept stream {}", unit.kind(), op.id, s.value));
        if (!(*accepted == layout_of(in, chosen_[i])))
          throw ConfigError(fmt::format("layout of '{}' does not match what '{}' expects", in, op.id));
        if (source_stream_.count(in)) entry_end.insert(Endpoint::at(chosen_[i]));
      }
      std::vector<Endpoint> dests;
      for (std::size_t j = 0; j < plan_.operators.size(); ++j) {
        const auto& ins = plan_.operators[j].inputs;
        if (std::find(ins.begin(), ins.end(), op.id) != ins.end()) dests.push_back(Endpoint::at(chosen_[j]));
      }
      if (op.id == plan_.output) dests.push_back(Endpoint::sink(chosen_[i].col));
      if (dests.empty()) throw ConfigError(fmt::format("result of '{}' is never used", op.id));
      std::sort(dests.begin(), dests.end());
      dep.flows.push_back({Endpoint::at(chosen_[i]), unit.output_stream(), dests});
      dep.flows.push_back({Endpoint::at(chosen_[i]), streams::kEnd, dests});
      dep.placements.push_back({op.id, op.kind, chosen_[i], inst_.slot_block(chosen_[i])});
      if (op.id == plan_.output)
        dep.output = OutputBinding{plan_.name, op.id, chosen_[i].col, unit.output_stream(), unit.output_layout()};
    }
    dep.flows.push_back({Endpoint::entry(), streams::kEnd, {entry_end.begin(), entry_end.end()}});

    for (const auto& d : inst_.deployments())
      if (d.output.sink_port == dep.output.sink_port && d.output.stream == dep.output.stream)
        throw Conflict{fmt::format("sink port {} stream {} is already bound to '{}'", dep.output.sink_port,
                                   dep.output.stream.value, d.query)};

    // Routes, merged over the switch tables already in place.
    for (const auto& f : dep.flows) {
      const std::uint8_t segs = f.stream == streams::kEnd ? 1 : segments_for(f, dep);
      for (const auto& d : f.destinations) router.route(f.producer, d, f.stream, segs);
    }

    // Every flow of every deployment must reach exactly its destinations.
    std::vector<const Flow*> flows;
    for (const auto& d : inst_.deployments())
      for (const auto& f : d.flows) flows.push_back(&f);
    for (const auto& f : dep.flows) flows.push_back(&f);
    std::map<std::pair<Endpoint, StreamId>, std::set<Endpoint>> intended;
    for (const auto* f : flows) intended[{f->producer, f->stream}].insert(f->destinations.begin(), f->destinations.end());
    std::map<Endpoint, std::uint32_t> end_in;
    for (const auto& [key, want] : intended) {
      const auto got = router.propagate(key.first, key.second);
      for (const auto& [ep, n] : got) {
        if (key.second == streams::kEnd) {
          if (ep.kind == Endpoint::Kind::kSlot) end_in[ep] += static_cast<std::uint32_t>(n);
          continue;
        }
        if (n != 1 || !want.count(ep))
          throw Conflict{fmt::format("stream {} from {} would reach {} ({}x)", key.second.value, to_string(key.first),
                                     to_string(ep), n)};
      }
      for (const auto& ep : want)
        if (!got.count(ep))
          throw Conflict{fmt::format("stream {} from {} misses {}", key.second.value, to_string(key.first),
                                     to_string(ep))};
    }
    for (const auto& d : inst_.deployments())
      for (const auto& p : d.placements)
        if (end_in[Endpoint::at(p.slot)] != inst_.host(p.slot)->end_count())
          throw Conflict{fmt::format("deployment would change END fan-in of '{}' in '{}'", p.op_id, d.query)};

    // Switch instructions for entries that differ from what is installed.
    prog.tables = router.tables();
    for (const auto& [id, table] : prog.tables) {
      const bool g = router.is_gswitch(id);
      const noc::RoutingTable& now = current_table(id, g);
      for (const auto& e : table.entries()) {
        const auto* old = now.find(e.stream);
        if (old != nullptr && *old == e) continue;
        prog.switch_instructions.push_back(NocInstruction{g ? SwitchKind::kGSwitchA : SwitchKind::kLSwitch,
                                                          BlockId{id}, e.stream, e.dest_mask, e.seg_count});
      }
    }

    // Unit configuration, in block-id order.
    std::vector<std::size_t> order(plan_.operators.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return inst_.slot_block(chosen_[a]) < inst_.slot_block(chosen_[b]);
    });
    for (auto i : order) {
      const auto& op = plan_.operators[i];
      const auto& unit = unit_at(chosen_[i]);
      PuInstruction pi{inst_.slot_block(chosen_[i]), {}};
      const TupleLayout* in = unit.input_layout(stream_of(op.inputs.front()));
      for (const auto& a : op.atoms) {
        if (a.op == AtomOp::kSet) {
          if (a.field != "limit") throw ConfigError(fmt::format("operator '{}' sets unknown parameter '{}'", op.id, a.field));
          pi.atoms.push_back({params::kLimit, AtomOp::kSet, a.value});
        } else {
          const auto idx = in->require(a.field);
          pi.atoms.push_back({static_cast<std::uint8_t>(idx), a.op, a.value});
        }
      }
      const auto fan_in = end_in[Endpoint::at(chosen_[i])];
      if (fan_in == 0) throw Conflict{fmt::format("'{}' would never see END", op.id)};
      pi.atoms.push_back({params::kEndCount, AtomOp::kSet, fan_in});
      prog.unit_instructions.push_back(std::move(pi));
    }
    return prog;
  }

  std::uint8_t segments_for(const Flow& f, const Deployment& dep) const {
    if (f.producer.kind == Endpoint::Kind::kEntry) {
      for (const auto& s : dep.sources)
        if (s.stream == f.stream) return static_cast<std::uint8_t>(s.layout.segment_count());
    }
    return static_cast<std::uint8_t>(unit_at(f.producer.slot).output_layout().segment_count());
  }

  const noc::RoutingTable& current_table(std::uint16_t id, bool g) const {
    for (std::size_t r = 0; r <= inst_.rows(); ++r)
      for (std::size_t c = 0; c < inst_.cols(); ++c) {
        if (g && inst_.gswitch(r, c).id().value == id) return inst_.gswitch(r, c).table();
        if (!g && r < inst_.rows() && inst_.lswitch(r, c).id().value == id) return inst_.lswitch(r, c).table();
      }
    throw ConfigError(fmt::format("no switch with id {}", id));
  }

  const QueryPlan& plan_;
  const TopologyInstance& inst_;
  std::set<SlotAddress> occupied_;
  std::map<std::string, StreamId> source_stream_;
  std::map<std::string, std::size_t> op_index_;
  std::vector<SlotAddress> slots_;
  std::vector<SlotAddress> chosen_;
  std::optional<InstructionProgram> result_;
  std::string last_reason_;
  std::size_t attempts_ = 0;
};

}  // namespace

std::vector<noc::Flit> InstructionProgram::flits() const {
  std::vector<noc::Flit> out;
  for (const auto& i : switch_instructions) out.push_back({encode_noc_instruction(i), true});
  for (const auto& p : unit_instructions) {
    const auto segs = encode_pu_instruction(p);
    for (std::size_t k = 0; k < segs.size(); ++k) out.push_back({segs[k], k + 1 == segs.size()});
  }
  return out;
}

std::vector<std::string> InstructionProgram::dump() const {
  std::vector<std::string> out;
  for (const auto& i : switch_instructions) out.push_back(to_string(i));
  for (const auto& p : unit_instructions) out.push_back(to_string(p));
  return out;
}

InstructionProgram assign_query(const QueryPlan& plan, const TopologyInstance& instance) {
  plan.validate();
  for (const auto& op : plan.operators) {
    if (op.kind == kBypass) throw ConfigError(fmt::format("operator '{}' cannot be a BYPASS", op.id));
  }
  return Search(plan, instance).run();
}

void deploy(TopologyInstance& instance, const InstructionProgram& program, std::uint64_t cycle_cap) {
  for (const auto& f : program.flits()) instance.injector().enqueue(f);
  instance.drain(cycle_cap);
  for (const auto& i : program.switch_instructions)
    if (!instance.has_block(i.b_id))
      throw SimulationFault(fmt::format("instruction addressed to nonexistent block {}", i.b_id.value));
  for (const auto& p : program.unit_instructions)
    if (!instance.has_block(p.b_id))
      throw SimulationFault(fmt::format("instruction addressed to nonexistent block {}", p.b_id.value));
  for (std::size_t r = 0; r <= instance.rows(); ++r)
    for (std::size_t c = 0; c < instance.cols(); ++c) {
      const auto& g = instance.gswitch(r, c);
      if (auto it = program.tables.find(g.id().value); it != program.tables.end() && !(it->second == g.table()))
        throw SimulationFault(fmt::format("switch G({},{}) did not take its routing table", r, c));
      if (r == instance.rows()) continue;
      const auto& l = instance.lswitch(r, c);
      if (auto it = program.tables.find(l.id().value); it != program.tables.end() && !(it->second == l.table()))
        throw SimulationFault(fmt::format("switch L({},{}) did not take its routing table", r, c));
    }
  instance.deployments().push_back(program.deployment);
}

}  // namespace diba::topology
