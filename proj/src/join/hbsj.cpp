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

#include "diba/join/hbsj.hpp"

#include <fmt/format.h>

#include <bit>

#include "diba/core/error.hpp"

namespace diba::join {

void HbsjConfig::validate() const {
  if (window == 0) throw ConfigError("window size must be positive");
  if (hash_rows == 0 || !std::has_single_bit(hash_rows))
    throw ConfigError(fmt::format("hash table rows {} must be a power of two", hash_rows));
  if (hash_rows > (std::size_t{1} << 24)) throw ConfigError(fmt::format("hash table rows {} too large", hash_rows));
  if (overflow_capacity < window)
    throw ConfigError(fmt::format("overflow capacity {} is smaller than window {}", overflow_capacity, window));
}

HashIndex::HashIndex(const HbsjConfig& cfg)
    : seed1_(cfg.seed1), seed2_(cfg.seed2), row_mask_(static_cast<std::uint32_t>(cfg.hash_rows - 1)) {
  cfg.validate();
  for (auto& t : tables_) t.assign(cfg.hash_rows, Cell{});
  overflow_.assign(cfg.overflow_capacity, Cell{});
}

Location HashIndex::insert(std::uint64_t key, std::uint32_t handle) {
  const std::uint32_t r1 = row(hash_key(key, seed1_));
  const std::uint32_t r2 = row(hash_key(key, seed2_));
  const std::array<std::uint32_t, 4> rows{r1, r1, r2, r2};
  for (std::uint8_t t = 0; t < 4; ++t) {
    Cell& c = tables_[t][rows[t]];
    if (!c.used) {
      c = Cell{true, handle, key};
      ++table_used_;
      return Location{t, rows[t]};
    }
  }
  std::uint32_t slot;
  if (!free_slots_.empty()) {
    slot = free_slots_.back();
    free_slots_.pop_back();
  } else if (overflow_high_ < overflow_.size()) {
    slot = static_cast<std::uint32_t>(overflow_high_++);
  } else {
    throw SimulationFault(fmt::format("overflow buffer full at {} entries", overflow_.size()));
  }
  overflow_[slot] = Cell{true, handle, key};
  ++overflow_used_;
  return Location{Location::kOverflow, slot};
}

void HashIndex::erase(Location loc) {
  Cell& c = loc.table == Location::kOverflow ? overflow_.at(loc.index) : tables_.at(loc.table).at(loc.index);
  if (!c.used) throw SimulationFault("erasing an empty hash cell");
  c.used = false;
  if (loc.table == Location::kOverflow) {
    free_slots_.push_back(loc.index);
    --overflow_used_;
  } else {
    --table_used_;
  }
}

void HashIndex::clear() {
  for (auto& t : tables_) std::fill(t.begin(), t.end(), Cell{});
  std::fill(overflow_.begin(), overflow_.begin() + static_cast<std::ptrdiff_t>(overflow_high_), Cell{});
  free_slots_.clear();
  overflow_high_ = 0;
  overflow_used_ = 0;
  table_used_ = 0;
}

JoinWindow::JoinWindow(const HbsjConfig& cfg, std::vector<std::size_t> key_fields)
    : key_fields_(std::move(key_fields)), ring_(cfg.window) {
  cfg.validate();
  if (key_fields_.empty()) throw ConfigError("join window needs at least one key");
  indexes_.reserve(key_fields_.size());
  for (std::size_t i = 0; i < key_fields_.size(); ++i) indexes_.emplace_back(cfg);
}

JoinWindow::InsertResult JoinWindow::insert(const Tuple& t) {
  InsertResult r;
  Record& rec = ring_[next_];
  if (live_ == ring_.size()) {
    for (std::size_t i = 0; i < indexes_.size(); ++i) indexes_[i].erase(rec.where[i]);
    r.expired = std::move(rec.tuple);
    --live_;
  }
  rec.tuple = t;
  rec.where.resize(indexes_.size());
  const auto handle = static_cast<std::uint32_t>(next_);
  for (std::size_t i = 0; i < indexes_.size(); ++i) rec.where[i] = indexes_[i].insert(t.values.at(key_fields_[i]), handle);
  next_ = (next_ + 1) % ring_.size();
  ++live_;
  return r;
}

std::vector<const Tuple*> JoinWindow::probe(std::size_t idx, std::uint64_t key, std::size_t* scanned) const {
  std::vector<const Tuple*> out;
  const std::size_t s = indexes_.at(idx).probe(key, [&](std::uint32_t h) { out.push_back(&ring_[h].tuple); });
  if (scanned != nullptr) *scanned = s;
  return out;
}

void JoinWindow::clear() {
  for (auto& i : indexes_) i.clear();
  for (auto& r : ring_) r = Record{};
  next_ = 0;
  live_ = 0;
}

std::vector<Tuple> JoinWindow::contents() const {
  std::vector<Tuple> out;
  out.reserve(live_);
  const std::size_t oldest = (next_ + ring_.size() - live_) % ring_.size();
  for (std::size_t k = 0; k < live_; ++k) out.push_back(ring_[(oldest + k) % ring_.size()].tuple);
  return out;
}

}  // namespace diba::join
