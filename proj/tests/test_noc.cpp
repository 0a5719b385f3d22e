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

#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "diba/core/error.hpp"
#include "diba/core/instruction.hpp"
#include "diba/core/tuple.hpp"
#include "diba/noc/buffer.hpp"
#include "diba/noc/collector.hpp"
#include "diba/noc/endpoints.hpp"
#include "diba/noc/gswitch_a.hpp"
#include "diba/noc/gswitch_b.hpp"
#include "diba/noc/lswitch.hpp"
#include "diba/noc/network_interface.hpp"

using namespace diba;
using namespace diba::noc;

namespace {

std::vector<Flit> frame(const std::vector<Segment>& segs) {
  std::vector<Flit> out;
  for (std::size_t i = 0; i < segs.size(); ++i) out.push_back({segs[i], i + 1 == segs.size()});
  return out;
}

std::vector<Flit> tuple_flits(StreamId s, std::uint64_t v, std::size_t segs) {
  std::vector<Segment> out{Segment(s, v)};
  for (std::size_t i = 1; i < segs; ++i) out.emplace_back(streams::kNull, v + i);
  return frame(out);
}

Flit instruction_flit(const std::string& text) { return {encode_noc_instruction(parse_noc_instruction(text)), true}; }

// Minimal stepping harness: blocks in order, then link commits.
struct Rig {
  std::vector<std::unique_ptr<BoundedBuffer>> links;
  std::vector<Block*> blocks;

  BoundedBuffer* link(std::size_t cap = BoundedBuffer::kDefaultCapacity) {
    links.push_back(std::make_unique<BoundedBuffer>(cap));
    return links.back().get();
  }
  void run(std::size_t cycles) {
    for (std::size_t i = 0; i < cycles; ++i) {
      for (auto* b : blocks) b->step();
      for (auto& l : links) l->commit();
    }
  }
};

// A link takes one flit per cycle, so each push is committed before the next.
void load(BoundedBuffer* b, const std::vector<Flit>& flits) {
  for (const auto& f : flits) {
    b->push(f);
    b->commit();
  }
}

std::vector<Flit> drain(BoundedBuffer& b) {
  std::vector<Flit> out;
  while (!b.empty()) out.push_back(b.pop());
  return out;
}

}  // namespace

TEST(BoundedBuffer, StagedUntilCommit) {
  BoundedBuffer b(2);
  b.push({Segment(streams::kLineitem, 1), true});
  EXPECT_TRUE(b.empty());
  EXPECT_FALSE(b.drained());
  EXPECT_TRUE(b.commit());
  EXPECT_EQ(b.front().segment.payload(), 1u);
  b.push({Segment(streams::kLineitem, 2), true});
  EXPECT_FALSE(b.can_push());
  EXPECT_THROW(b.push({}), SimulationFault);
  b.pop();
  b.commit();
  EXPECT_EQ(b.pop().segment.payload(), 2u);
  EXPECT_THROW(b.pop(), SimulationFault);
}

TEST(BoundedBuffer, ThrottleHoldsOneFlitPerPeriod) {
  BoundedBuffer b(16, 4);
  b.push({});
  int accepted_after = 0;
  for (int c = 1; c <= 8 && accepted_after == 0; ++c) {
    b.commit();
    if (b.can_push()) accepted_after = c;
  }
  EXPECT_EQ(accepted_after, 4);
}

TEST(GSwitchA, ProgrammedByMatchingInstructionOnly) {
  GSwitchA g(BlockId{7});
  g.program(parse_noc_instruction("A:7:2:11:2"));
  g.program(parse_noc_instruction("A:8:3:01:1"));
  ASSERT_NE(g.table().find(streams::kLineitem), nullptr);
  EXPECT_EQ(g.table().find(streams::kLineitem)->dest_mask, 3);
  EXPECT_EQ(g.table().find(streams::kOrders), nullptr);
  EXPECT_THROW(g.program(parse_noc_instruction("L:7:2:0001:0")), SimulationFault);
}

TEST(GSwitchA, MulticastKeepsTuplesWhole) {
  Rig rig;
  GSwitchA g(BlockId{1});
  auto *w = rig.link(), *n = rig.link(), *s = rig.link(64), *e = rig.link(64);
  g.connect_input(GSwitchA::kWest, w);
  g.connect_input(GSwitchA::kNorth, n);
  g.connect_output(GSwitchA::kSouth, s);
  g.connect_output(GSwitchA::kEast, e);
  g.program(parse_noc_instruction("A:1:2:11:3"));
  g.program(parse_noc_instruction("A:1:3:01:2"));
  rig.blocks = {&g};
  load(w, tuple_flits(streams::kLineitem, 100, 3));
  load(n, tuple_flits(streams::kOrders, 200, 2));
  w->commit();
  n->commit();
  rig.run(1);
  for (int i = 0; i < 2; ++i) {
    load(n, tuple_flits(streams::kOrders, 300 + i, 2));
    n->commit();
  }
  rig.run(40);
  const auto south = drain(*s), east = drain(*e);
  EXPECT_EQ(east, tuple_flits(streams::kLineitem, 100, 3));
  // South holds the lineitem once plus three orders, never interleaved mid-tuple.
  ASSERT_EQ(south.size(), 9u);
  for (std::size_t i = 0; i < south.size();) {
    const auto tag = south[i].segment.tag();
    const std::size_t len = tag == streams::kLineitem ? 3 : 2;
    for (std::size_t k = 1; k < len; ++k) EXPECT_TRUE(south[i + k].segment.is_continuation());
    EXPECT_TRUE(south[i + len - 1].tail);
    i += len;
  }
}

TEST(GSwitchA, FaultsOnUnroutedStreamAndBadLength) {
  {
    GSwitchA g(BlockId{3});
    BoundedBuffer w, s;
    g.connect_input(GSwitchA::kWest, &w);
    g.connect_output(GSwitchA::kSouth, &s);
    w.push({Segment(streams::kCustomer, 1), true});
    w.commit();
    try {
      g.step();
      FAIL();
    } catch (const SimulationFault& f) {
      EXPECT_NE(std::string(f.what()).find("unrouted stream 4 at block 3"), std::string::npos);
    }
  }
  {
    GSwitchA g(BlockId{3});
    BoundedBuffer w, s;
    g.connect_input(GSwitchA::kWest, &w);
    g.connect_output(GSwitchA::kSouth, &s);
    g.program(parse_noc_instruction("A:3:4:01:2"));
    w.push({Segment(streams::kCustomer, 1), true});  // one segment where the table says two
    w.commit();
    EXPECT_THROW(g.step(), SimulationFault);
  }
  {
    GSwitchA g(BlockId{3});
    BoundedBuffer w, s;
    g.connect_input(GSwitchA::kWest, &w);
    g.connect_output(GSwitchA::kSouth, &s);
    w.push({Segment(streams::kNull, 1), true});
    w.commit();
    EXPECT_THROW(g.step(), SimulationFault);
  }
}

TEST(GSwitchA, InstructionsFollowFanoutAndProgramOnTheWay) {
  Rig rig;
  GSwitchA g(BlockId{2});
  auto *w = rig.link(), *s = rig.link(), *e = rig.link();
  g.connect_input(GSwitchA::kWest, w);
  g.connect_output(GSwitchA::kSouth, s);
  g.connect_output(GSwitchA::kEast, e);
  g.set_instruction_fanout(GSwitchA::kWest, 0x2);
  rig.blocks = {&g};
  w->push(instruction_flit("A:2:5:01:1"));
  w->commit();
  rig.run(3);
  EXPECT_NE(g.table().find(streams::kEnd), nullptr);
  EXPECT_EQ(drain(*e).size(), 1u);
  EXPECT_TRUE(drain(*s).empty());
}

TEST(LSwitch, RoutesByMaskAndBroadcastsInstructions) {
  Rig rig;
  LSwitch l(BlockId{4}, 3);
  auto* in = rig.link();
  std::array<BoundedBuffer*, 3> out{rig.link(), rig.link(), rig.link()};
  l.connect_input(in);
  for (std::size_t p = 0; p < 3; ++p) l.connect_output(p, out[p]);
  rig.blocks = {&l};
  load(in, {instruction_flit("L:4:3:0101:0")});
  load(in, tuple_flits(streams::kOrders, 9, 2));
  in->commit();
  rig.run(6);
  EXPECT_EQ(drain(*out[0]).size(), 3u);
  EXPECT_EQ(drain(*out[1]).size(), 1u);
  EXPECT_EQ(drain(*out[2]).size(), 3u);
  EXPECT_THROW(l.program(parse_noc_instruction("L:4:3:1000:0")), SimulationFault);  // port 3 does not exist
}

TEST(Collector, MergesWholeMessagesRoundRobin) {
  Rig rig;
  Collector c(BlockId{9}, 2);
  auto *a = rig.link(), *b = rig.link(), *out = rig.link(64);
  c.connect_input(0, a);
  c.connect_input(1, b);
  c.connect_output(out);
  rig.blocks = {&c};
  for (int i = 0; i < 3; ++i) {
    load(a, tuple_flits(streams::kLineitem, 10 + i, 2));
    load(b, tuple_flits(streams::kOrders, 20 + i, 3));
  }
  a->commit();
  b->commit();
  rig.run(40);
  const auto flits = drain(*out);
  ASSERT_EQ(flits.size(), 15u);
  std::vector<std::uint64_t> heads;
  for (std::size_t i = 0; i < flits.size(); ++i)
    if (!flits[i].segment.is_continuation()) heads.push_back(flits[i].segment.payload());
  EXPECT_EQ(heads, (std::vector<std::uint64_t>{10, 20, 11, 21, 12, 22}));
}

TEST(GSwitchB, SharedBufferDeliversToEachMaskedPortInOrder) {
  Rig rig;
  GSwitchB g(BlockId{5}, 3, 8);
  auto* in = rig.link();
  std::array<BoundedBuffer*, 3> out{rig.link(2), rig.link(64), rig.link(64)};
  g.connect_input(in);
  for (std::size_t p = 0; p < 3; ++p) g.connect_output(p, out[p]);
  g.program(parse_noc_instruction("L:5:2:0011:0"));
  g.program(parse_noc_instruction("L:5:3:0110:0"));
  rig.blocks = {&g};
  std::vector<std::vector<Flit>> want(3);
  std::deque<Flit> src;
  for (int i = 0; i < 10; ++i) {
    const StreamId s = i % 2 ? streams::kOrders : streams::kLineitem;
    const auto f = tuple_flits(s, i, 2);
    src.insert(src.end(), f.begin(), f.end());
    for (std::size_t p = 0; p < 3; ++p)
      if ((s == streams::kLineitem ? 0x3 : 0x6) >> p & 1) want[p].insert(want[p].end(), f.begin(), f.end());
  }
  std::vector<std::vector<Flit>> got(3);
  for (int cyc = 0; cyc < 400; ++cyc) {
    if (!src.empty() && in->can_push()) in->push(src.front()), src.pop_front();
    g.step();
    EXPECT_LE(g.shared_occupancy(), 8u);
    // Port 0 drains slowly, so the others must not be held back by it beyond the ring size.
    if (cyc % 5 == 0 && !out[0]->empty()) got[0].push_back(out[0]->pop());
    for (std::size_t p = 1; p < 3; ++p)
      while (!out[p]->empty()) got[p].push_back(out[p]->pop());
    for (auto& l : rig.links) l->commit();
  }
  while (!out[0]->empty()) got[0].push_back(out[0]->pop());
  for (std::size_t p = 0; p < 3; ++p) EXPECT_EQ(got[p], want[p]) << "port " << p;
  EXPECT_TRUE(g.idle());
}

TEST(Endpoints, SinkReassemblesMessages) {
  Rig rig;
  Injector inj;
  Sink sink(1);
  auto* l = rig.link();
  inj.connect_output(l);
  sink.connect_input(0, l);
  rig.blocks = {&inj, &sink};
  for (const auto& f : tuple_flits(streams::kLineitem, 1, 3)) inj.enqueue(f);
  for (const auto& f : tuple_flits(streams::kEnd, 0, 1)) inj.enqueue(f);
  rig.run(10);
  ASSERT_EQ(sink.messages(0).size(), 2u);
  EXPECT_EQ(sink.messages(0)[0].size(), 3u);
  EXPECT_EQ(inj.take_tuple_count(), 1u);
  EXPECT_EQ(inj.take_tuple_count(), 0u);
  EXPECT_EQ(sink.take(0).size(), 2u);
  EXPECT_TRUE(sink.messages(0).empty());
}

TEST(NetworkInterface, SerializeRoundTrip) {
  std::mt19937_64 rng(3);
  for (unsigned lanes : {1u, 2u, 8u, 16u, 32u, 64u}) {
    EXPECT_EQ(transfer_cycles(lanes), 64 / lanes);
    for (int i = 0; i < 50; ++i) {
      const auto w = rng();
      const auto chunks = serialize(w, lanes);
      EXPECT_EQ(chunks.size(), 64 / lanes);
      EXPECT_EQ(deserialize(chunks, lanes), w);
    }
  }
  EXPECT_EQ(serialize(0x8000000000000001ull, 32), (std::vector<std::uint64_t>{0x80000000u, 1}));
  EXPECT_THROW(serialize(0, 3), ConfigError);
}
