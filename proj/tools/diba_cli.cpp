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

// Command-line front end: run queries, sweep table sizes, verify against the
// oracle, generate data and print topologies.
//
// Exit codes: 0 ok, 1 result mismatch, 2 usage or input error, 3 simulation fault.

#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "diba/core/date.hpp"
#include "diba/core/error.hpp"
#include "diba/engine/engine.hpp"
#include "diba/oracle/oracle.hpp"
#include "diba/topology/assigner.hpp"
#include "diba/topology/instance.hpp"
#include "diba/tpch/datagen.hpp"
#include "diba/tpch/queries.hpp"

using namespace diba;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kMismatch = 1, kUsage = 2, kFault = 3;

struct Common {
  std::string data;
  std::size_t window = 1024;
  std::size_t hash_table = 2048;
  std::size_t overflow = 1024;
  std::size_t buffer = noc::BoundedBuffer::kDefaultCapacity;
  std::uint64_t seed = 0xD1BA;
  std::uint64_t bucket = 100'000;
  std::size_t repeat = 1;
  std::string variant = "optimized";
  std::string topology;
  std::string plan;
  std::string segment = "BUILDING";
  std::string date = "1995-03-15";
  std::uint32_t limit = 10;
  std::uint32_t delta = 90;
  std::string cost;
  bool show_program = false;
};

void add_common(CLI::App* cmd, Common& c, bool need_data = true, bool single_ht = true) {
  auto* d = cmd->add_option("--data", c.data, "directory with customer.tbl, orders.tbl, lineitem.tbl");
  if (need_data) d->required();
  cmd->add_option("--window", c.window, "tuples kept per stream in the join window")->capture_default_str();
  if (single_ht)
    cmd->add_option("--hash-table", c.hash_table, "rows per hash table (power of two)")->capture_default_str();
  cmd->add_option("--overflow", c.overflow, "overflow buffer entries")->capture_default_str();
  cmd->add_option("--buffer", c.buffer, "link buffer depth in segments")->capture_default_str();
  cmd->add_option("--seed", c.seed, "source interleaving seed")->capture_default_str();
  cmd->add_option("--bucket", c.bucket, "metric bucket size in cycles")->capture_default_str();
  cmd->add_option("--repeat", c.repeat, "runs with seeds seed, seed+1, ...; metrics merged")->capture_default_str();
  cmd->add_option("--variant", c.variant, "join arrangement")->check(CLI::IsMember({"optimized", "direct"}))
      ->capture_default_str();
  cmd->add_option("--topology", c.topology, "topology matrix JSON (default: built-in)");
  cmd->add_option("--plan", c.plan, "query plan JSON (default: built-in)");
  cmd->add_option("--segment", c.segment, "Q3 market segment")->capture_default_str();
  cmd->add_option("--date", c.date, "Q3 date")->capture_default_str();
  cmd->add_option("--limit", c.limit, "Q3 result rows")->capture_default_str();
  cmd->add_option("--delta", c.delta, "Q1 days before 1998-12-01")->capture_default_str();
  cmd->add_option("--cost", c.cost, "cost model JSON overriding the defaults");
  cmd->add_flag("--show-program", c.show_program, "print the deployment instructions");
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open {}", path));
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("{}: {}", path, e.what()));
  }
}

CostModel cost_model(const Common& c) {
  CostModel m;
  if (c.cost.empty()) return m;
  const auto j = read_json(c.cost);
  for (const auto& [k, v] : j.items()) {
    Cycles* field = k == "selection"       ? &m.selection
                    : k == "aggregation"   ? &m.aggregation
                    : k == "comparison"    ? &m.comparison
                    : k == "hash_probe"    ? &m.hash_probe
                    : k == "overflow_scan" ? &m.overflow_scan
                    : k == "insert"        ? &m.insert
                    : k == "expire"        ? &m.expire
                    : k == "pass_through"  ? &m.pass_through
                                           : nullptr;
    if (k == "ni_lanes") m.ni_lanes = v.get<unsigned>();
    else if (field != nullptr) *field = v.get<Cycles>();
    else throw ConfigError(fmt::format("unknown cost field '{}'", k));
  }
  m.validate();
  return m;
}

tpch::JoinVariant variant(const Common& c) {
  return c.variant == "direct" ? tpch::JoinVariant::kDirect : tpch::JoinVariant::kOptimized;
}

Q3Params q3_params(const Common& c) {
  Q3Params p;
  const auto seg = parse_market_segment(c.segment);
  if (!seg) throw ConfigError(fmt::format("unknown market segment '{}'", c.segment));
  p.segment = *seg;
  p.date = parse_date(c.date);
  p.limit = c.limit;
  return p;
}

Q1Params q1_params(const Common& c) {
  Q1Params p;
  p.ship_cutoff = day_number(1998, 12, 1) - c.delta;
  return p;
}

topology::BuildOptions build_options(const Common& c, std::size_t ht) {
  topology::BuildOptions o;
  o.buffer_capacity = c.buffer;
  o.cost = cost_model(c);
  o.join.window = c.window;
  o.join.hash_rows = ht;
  o.join.overflow_capacity = c.overflow;
  return o;
}

struct Session {
  topology::TopologyInstance instance;
  std::string query;
};

Session deploy_query(const Common& c, bool q1, std::size_t ht) {
  const auto m = !c.topology.empty() ? topology::matrix_from_json(read_json(c.topology))
                 : q1                ? tpch::q1_topology()
                                     : tpch::q3_topology(variant(c));
  const auto plan = !c.plan.empty() ? topology::plan_from_json(read_json(c.plan))
                    : q1            ? tpch::q1_plan(q1_params(c))
                                    : tpch::q3_plan(q3_params(c), variant(c));
  Session s{topology::TopologyInstance(m, topology::UnitLibrary::standard(), build_options(c, ht)), plan.name};
  const auto prog = topology::assign_query(plan, s.instance);
  if (c.show_program)
    for (const auto& line : prog.dump()) std::cerr << line << '\n';
  topology::deploy(s.instance, prog);
  return s;
}

engine::RunOptions run_options(const Common& c, std::uint64_t seed) {
  engine::RunOptions o;
  o.seed = seed;
  o.bucket_cycles = c.bucket;
  o.cycle_cap = engine::cycle_cap_from_env();
  o.trace_join = true;
  return o;
}

struct Outcome {
  engine::RunResult last;
  std::vector<engine::BucketRow> buckets;
};

Outcome run_query(const Common& c, bool q1, std::size_t ht, const tpch::Dataset& d) {
  if (c.repeat == 0) throw ConfigError("--repeat must be at least 1");
  auto s = deploy_query(c, q1, ht);
  const auto sources = q1 ? tpch::q1_sources(d) : tpch::q3_sources(d);
  std::vector<std::vector<engine::BucketRow>> runs;
  Outcome out;
  for (std::size_t i = 0; i < c.repeat; ++i) {
    out.last = engine::run(s.instance, sources, run_options(c, c.seed + i));
    runs.push_back(out.last.buckets);
  }
  out.buckets = engine::combine_runs(runs);
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(fmt::format("cannot write {}", path));
  out << text;
}

std::string metrics_text(const Outcome& o) {
  std::ostringstream ss;
  engine::write_metrics_csv(ss, o.buckets, o.last.index_names);
  return ss.str();
}

std::string results_text(bool q1, const std::vector<Tuple>& rows) {
  std::ostringstream ss;
  if (q1) tpch::write_q1_results(ss, rows);
  else tpch::write_q3_results(ss, rows);
  return ss.str();
}

int cmd_run(const Common& c, bool q1, const std::string& metrics, const std::string& results) {
  const auto d = tpch::load_dataset(c.data);
  const auto o = run_query(c, q1, c.hash_table, d);
  const auto text = results_text(q1, o.last.outputs.front().tuples);
  if (results.empty()) std::cout << text;
  else write_file(results, text);
  if (!metrics.empty()) write_file(metrics, metrics_text(o));
  std::cerr << fmt::format("{} cycles, {} tuples injected\n", o.last.total_cycles, o.last.tuples_injected);
  return kOk;
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t pos = 0;
    try {
      out.push_back(std::stoull(item, &pos));
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) throw ConfigError(fmt::format("bad list entry '{}'", item));
  }
  if (out.empty()) throw ConfigError("empty hash table list");
  return out;
}

int cmd_sweep(const Common& c, const std::string& list, const std::string& out_dir, bool q1) {
  const auto d = tpch::load_dataset(c.data);
  fs::create_directories(out_dir);
  std::string summary = "ht,total_cycles\n";
  for (auto ht : parse_list(list)) {
    const auto o = run_query(c, q1, ht, d);
    write_file((fs::path(out_dir) / fmt::format("metrics_ht{}.csv", ht)).string(), metrics_text(o));
    summary += fmt::format("{},{}\n", ht, o.last.total_cycles);
    std::cerr << fmt::format("ht={} cycles={}\n", ht, o.last.total_cycles);
  }
  write_file((fs::path(out_dir) / "summary.csv").string(), summary);
  return kOk;
}

std::string tuple_line(const Tuple& t) {
  std::string s = fmt::format("{}", t.stream.value);
  for (auto v : t.values) s += fmt::format(",{}", v);
  return s + "\n";
}

int report(const std::string& what, const std::string& got, const std::string& want) {
  if (got == want) {
    std::cout << what << ": match\n";
    return kOk;
  }
  std::istringstream a(got), b(want);
  std::string la, lb;
  for (std::size_t line = 1;; ++line) {
    const bool ha = static_cast<bool>(std::getline(a, la)), hb = static_cast<bool>(std::getline(b, lb));
    if (ha && hb && la == lb) continue;
    std::cout << fmt::format("{}: MISMATCH at line {}\n  engine: {}\n  oracle: {}\n", what, line,
                             ha ? la : "<end>", hb ? lb : "<end>");
    break;
  }
  return kMismatch;
}

int cmd_verify(const Common& c) {
  const auto d = tpch::load_dataset(c.data);
  int status = kOk;
  {
    const auto o = run_query(c, false, c.hash_table, d);
    const auto got = results_text(false, o.last.output("q3").tuples);
    const auto p = q3_params(c);
    // The join must have seen exactly the selected rows, each stream in table order.
    const auto sel = oracle::q3_selected(d, p);
    std::string seen, want;
    for (const auto* part : {&sel.lineitem, &sel.orders, &sel.customer})
      for (const auto& t : *part) want += tuple_line(t);
    for (const auto s : {streams::kLineitem, streams::kOrders, streams::kCustomer})
      for (const auto& t : o.last.join_arrivals)
        if (t.stream == s) seen += tuple_line(t);
    status = std::max(status, report("q3 join input (selection oracle)", seen, want));
    status = std::max(status, report("q3 (windowed oracle)", got,
                                     results_text(false, oracle::oracle_q3_windowed(o.last.join_arrivals, c.window,
                                                                                    p.limit))));
    // The relational answer only applies when no window ever filled.
    if (d.lineitem.rows.size() <= c.window && d.orders.rows.size() <= c.window && d.customer.rows.size() <= c.window)
      status = std::max(status, report("q3 (relational oracle)", got, results_text(false, oracle::oracle_q3(d, p))));
  }
  {
    // --topology and --plan describe the Q3 side only.
    Common q1 = c;
    q1.topology.clear();
    q1.plan.clear();
    const auto o = run_query(q1, true, c.hash_table, d);
    status = std::max(status, report("q1", results_text(true, o.last.output("q1").tuples),
                                     results_text(true, oracle::oracle_q1(d, q1_params(c)))));
  }
  return status;
}

int cmd_gen(const tpch::DatasetSpec& spec, const std::string& out) {
  tpch::write_dataset(tpch::generate_dataset(spec), out);
  std::cerr << fmt::format("wrote {} customers, {} orders, {} lineitems to {}\n", spec.customers, spec.orders,
                           spec.lineitems, out);
  return kOk;
}

int cmd_show(const Common& c, const std::string& query, const std::string& dump_topology, const std::string& dump_plan) {
  topology::TopologyMatrix m;
  std::vector<topology::QueryPlan> plans;
  if (query == "q3") {
    m = tpch::q3_topology(variant(c));
    plans.push_back(tpch::q3_plan(q3_params(c), variant(c)));
  } else if (query == "q1") {
    m = tpch::q1_topology();
    plans.push_back(tpch::q1_plan(q1_params(c)));
  } else {
    m = tpch::combined_topology();
    plans.push_back(tpch::q1_plan(q1_params(c)));
    plans.push_back(tpch::q3_plan(q3_params(c)));
  }
  if (!c.topology.empty()) m = topology::matrix_from_json(read_json(c.topology));
  if (!c.plan.empty()) plans = {topology::plan_from_json(read_json(c.plan))};
  if (!dump_topology.empty()) write_file(dump_topology, topology::to_json(m).dump(2) + "\n");
  if (!dump_plan.empty()) write_file(dump_plan, topology::to_json(plans.back()).dump(2) + "\n");
  topology::TopologyInstance inst(m, topology::UnitLibrary::standard(), build_options(c, c.hash_table));
  std::cout << fmt::format("topology {}x{}, {} blocks, acyclic={}\n", inst.rows(), inst.cols(), inst.block_count(),
                           inst.acyclic());
  for (std::size_t r = 0; r < inst.rows(); ++r)
    for (std::size_t col = 0; col < inst.cols(); ++col) {
      std::cout << fmt::format("brick ({},{}):", r, col);
      for (std::size_t i = 0; i < inst.slot_count(r, col); ++i)
        std::cout << fmt::format(" [{}] {}", inst.slot_block({r, col, i}).value, inst.slot_kind({r, col, i}));
      std::cout << '\n';
    }
  std::cout << "blocks:\n";
  for (std::uint16_t id = 0; id < inst.block_count(); ++id)
    std::cout << fmt::format("  {:4} {}\n", id, inst.block_name(BlockId{id}));
  std::cout << "links:\n";
  for (const auto& e : inst.wiring()) std::cout << fmt::format("  {} -> {}\n", e.from, e.to);
  for (const auto& p : plans) {
    const auto prog = topology::assign_query(p, inst);
    std::cout << fmt::format("program {} ({} instructions):\n", p.name, prog.size());
    for (const auto& pl : prog.deployment.placements)
      std::cout << fmt::format("  place {} ({}) at S({},{},{}) b_id {}\n", pl.op_id, pl.kind, pl.slot.row,
                               pl.slot.col, pl.slot.slot, pl.b_id.value);
    for (const auto& line : prog.dump()) std::cout << "  " << line << '\n';
    topology::deploy(inst, prog);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle-stepped model of a reconfigurable stream query processor"};
  app.require_subcommand(1);

  Common run3, run1, sweep, verify, show;
  std::string metrics3, results3, metrics1, results1, ht_list = "32,64,128,256,512,1024,2048", sweep_out = ".";
  std::string show_query = "q3", dump_topology, dump_plan;
  bool sweep_q1 = false;
  tpch::DatasetSpec spec;
  std::string gen_out;

  auto* c_run3 = app.add_subcommand("run-q3", "run Q3 and write results and metrics");
  add_common(c_run3, run3);
  c_run3->add_option("--metrics", metrics3, "metrics CSV path");
  c_run3->add_option("--results", results3, "results CSV path (default stdout)");

  auto* c_run1 = app.add_subcommand("run-q1", "run Q1 and write results and metrics");
  add_common(c_run1, run1);
  c_run1->add_option("--metrics", metrics1, "metrics CSV path");
  c_run1->add_option("--results", results1, "results CSV path (default stdout)");

  auto* c_sweep = app.add_subcommand("sweep", "run Q3 for several hash table sizes");
  add_common(c_sweep, sweep, true, false);
  c_sweep->add_option("--hash-table", ht_list, "comma-separated table sizes")->capture_default_str();
  c_sweep->add_option("--out", sweep_out, "output directory")->capture_default_str();
  c_sweep->add_flag("--q1", sweep_q1, "sweep Q1 instead of Q3");

  auto* c_verify = app.add_subcommand("verify", "run Q3 and Q1 and compare with the oracle (--plan/--topology apply to Q3)");
  add_common(c_verify, verify);

  auto* c_gen = app.add_subcommand("gen-data", "write a synthetic dataset");
  c_gen->add_option("--seed", spec.seed, "generator seed")->capture_default_str();
  c_gen->add_option("--customers", spec.customers)->capture_default_str();
  c_gen->add_option("--orders", spec.orders)->capture_default_str();
  c_gen->add_option("--lineitems", spec.lineitems)->capture_default_str();
  c_gen->add_option("--out", gen_out, "output directory")->required();

  auto* c_show = app.add_subcommand("topology-show", "print a topology, its block ids and programs");
  add_common(c_show, show, false);
  c_show->add_option("--query", show_query, "which built-in layout")->check(CLI::IsMember({"q3", "q1", "combined"}))
      ->capture_default_str();
  c_show->add_option("--dump-topology", dump_topology, "write the topology matrix as JSON");
  c_show->add_option("--dump-plan", dump_plan, "write the (last) query plan as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n";
    const auto chosen = app.get_subcommands();
    std::cerr << (chosen.empty() ? app.help() : chosen.front()->help());
    return kUsage;
  }

  try {
    if (c_run3->parsed()) return cmd_run(run3, false, metrics3, results3);
    if (c_run1->parsed()) return cmd_run(run1, true, metrics1, results1);
    if (c_sweep->parsed()) return cmd_sweep(sweep, ht_list, sweep_out, sweep_q1);
    if (c_verify->parsed()) return cmd_verify(verify);
    if (c_gen->parsed()) return cmd_gen(spec, gen_out);
    if (c_show->parsed()) return cmd_show(show, show_query, dump_topology, dump_plan);
  } catch (const SimulationFault& e) {
    std::cerr << "simulation fault: " << e.what() << '\n';
    return kFault;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
