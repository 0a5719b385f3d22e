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

#include "diba/tpch/datagen.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <random>

#include "diba/core/date.hpp"
#include "diba/core/error.hpp"

namespace diba::tpch {

namespace {

constexpr std::array<const char*, 5> kSegments = {"AUTOMOBILE", "BUILDING", "FURNITURE", "HOUSEHOLD", "MACHINERY"};
constexpr std::array<const char*, 5> kPriorities = {"1-URGENT", "2-HIGH", "3-MEDIUM", "4-NOT SPECIFIED", "5-LOW"};
constexpr std::array<const char*, 4> kInstructions = {"DELIVER IN PERSON", "COLLECT COD", "NONE", "TAKE BACK RETURN"};
constexpr std::array<const char*, 7> kModes = {"REG AIR", "AIR", "RAIL", "SHIP", "TRUCK", "MAIL", "FOB"};
constexpr std::array<const char*, 16> kWords = {"furiously", "quickly", "carefully", "blithely", "final",
                                                "regular",   "express", "pending",   "ironic",   "bold",
                                                "deposits",  "accounts", "packages", "requests", "theodolites",
                                                "foxes"};

// Modulo draws keep the stream identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t n) { return g_() % n; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  std::string comment(std::size_t words) {
    std::string s;
    for (std::size_t i = 0; i < words; ++i) {
      if (i) s += ' ';
      s += kWords[below(kWords.size())];
    }
    return s;
  }

  std::string alnum(std::size_t n) {
    static constexpr std::string_view chars = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789,";
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += chars[below(chars.size())];
    return s;
  }

 private:
  std::mt19937_64 g_;
};

std::string money(std::int64_t cents) {
  const auto a = cents < 0 ? -cents : cents;
  return fmt::format("{}{}.{:02}", cents < 0 ? "-" : "", a / 100, a % 100);
}

std::uint64_t sparse_orderkey(std::size_t i) { return (i / 8) * 32 + i % 8 + 1; }

}  // namespace

Dataset generate_dataset(const DatasetSpec& spec) {
  if (spec.customers == 0 || spec.orders == 0) throw ConfigError("dataset needs customers and orders");
  Rng rng(spec.seed);
  Dataset d;

  for (std::size_t i = 0; i < spec.customers; ++i) {
    const auto key = i + 1;
    const char* seg = rng.below(4) == 0 ? "BUILDING" : kSegments[std::array<int, 4>{0, 2, 3, 4}[rng.below(4)]];
    const auto nation = rng.below(25);
    d.customer.rows.push_back({fmt::format("{}", key), fmt::format("Customer#{:09}", key), rng.alnum(rng.between(10, 25)),
                               fmt::format("{}", nation),
                               fmt::format("{}-{:03}-{:03}-{:04}", nation + 10, rng.between(100, 999),
                                           rng.between(100, 999), rng.between(1000, 9999)),
                               money(static_cast<std::int64_t>(rng.between(0, 1099998)) - 99999), seg,
                               rng.comment(rng.between(3, 8))});
  }

  // Lines per order: 1..7, then nudged to the requested total.
  std::vector<std::size_t> lines(spec.orders);
  std::size_t total = 0;
  for (auto& n : lines) total += (n = rng.between(1, 7));
  // Orders keep at least one line unless there are fewer lines than orders.
  const std::size_t floor = spec.lineitems >= spec.orders ? 1 : 0;
  std::size_t cursor = rng.below(spec.orders);
  while (total > spec.lineitems) {
    if (lines[cursor] > floor) --lines[cursor], --total;
    cursor = (cursor + 1) % spec.orders;
  }
  while (total < spec.lineitems) {
    ++lines[cursor], ++total;
    cursor = (cursor + 1) % spec.orders;
  }

  const std::uint32_t first = day_number(1992, 1, 1);
  const std::uint32_t last = day_number(1998, 12, 31) - 151;
  const std::uint32_t cutoff = day_number(1995, 6, 17);
  for (std::size_t i = 0; i < spec.orders; ++i) {
    const auto okey = sparse_orderkey(i);
    const auto ckey = rng.between(1, spec.customers);
    const auto odate = static_cast<std::uint32_t>(rng.between(first, last));
    std::int64_t total_price = 0;
    std::size_t shipped = 0;
    for (std::size_t ln = 0; ln < lines[i]; ++ln) {
      const auto qty = rng.between(1, 50);
      const auto part_price = rng.between(90000, 200000);  // cents
      const auto price = qty * part_price;
      const auto disc = rng.between(0, 10);
      const auto tax = rng.between(0, 8);
      const auto ship = odate + static_cast<std::uint32_t>(rng.between(1, 121));
      const auto commit = odate + static_cast<std::uint32_t>(rng.between(30, 90));
      const auto receipt = ship + static_cast<std::uint32_t>(rng.between(1, 30));
      const char* flag = receipt <= cutoff ? (rng.below(2) ? "R" : "A") : "N";
      const char* status = ship > cutoff ? "O" : "F";
      shipped += status[0] == 'F';
      total_price += static_cast<std::int64_t>(price * (100 - disc) * (100 + tax) / 10000);
      d.lineitem.rows.push_back({fmt::format("{}", okey), fmt::format("{}", rng.between(1, 20000)),
                                 fmt::format("{}", rng.between(1, 1000)), fmt::format("{}", ln + 1),
                                 fmt::format("{}.00", qty), money(static_cast<std::int64_t>(price)),
                                 fmt::format("0.{:02}", disc), fmt::format("0.{:02}", tax), flag, status,
                                 format_date(ship), format_date(commit), format_date(receipt),
                                 kInstructions[rng.below(kInstructions.size())], kModes[rng.below(kModes.size())],
                                 rng.comment(rng.between(2, 6))});
    }
    const char* ostatus = shipped == lines[i] ? "F" : shipped == 0 ? "O" : "P";
    d.orders.rows.push_back({fmt::format("{}", okey), fmt::format("{}", ckey), ostatus, money(total_price),
                             format_date(odate), kPriorities[rng.below(kPriorities.size())],
                             fmt::format("Clerk#{:09}", rng.between(1, 1000)), "0", rng.comment(rng.between(3, 9))});
  }
  return d;
}

void write_dataset(const Dataset& d, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const Table* t : {&d.customer, &d.orders, &d.lineitem}) {
    const auto path = dir / file_name(t->kind);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError(fmt::format("cannot write {}", path.string()));
    write_tbl(out, *t);
  }
}

Dataset load_dataset(const std::filesystem::path& dir) {
  Dataset d;
  d.customer = read_tbl(dir / file_name(TableKind::kCustomer), TableKind::kCustomer);
  d.orders = read_tbl(dir / file_name(TableKind::kOrders), TableKind::kOrders);
  d.lineitem = read_tbl(dir / file_name(TableKind::kLineitem), TableKind::kLineitem);
  return d;
}

}  // namespace diba::tpch
