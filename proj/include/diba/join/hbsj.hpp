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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "diba/core/tuple.hpp"
#include "diba/join/murmur3.hpp"

namespace diba::join {

struct HbsjConfig {
  std::size_t window = 1024;             // w: tuples kept per stream
  std::size_t hash_rows = 2048;          // ht: rows in each of the four tables
  std::size_t overflow_capacity = 1024;  // must be >= window
  std::uint32_t seed1 = kSeed1;
  std::uint32_t seed2 = kSeed2;

  /// Throws ConfigError unless ht is a power of two and overflow >= window.
  void validate() const;
};

/// Where a tuple handle lives inside a HashIndex.
struct Location {
  std::uint8_t table = 0;  // 0..3 hash tables, 4 overflow
  std::uint32_t index = 0;

  static constexpr std::uint8_t kOverflow = 4;
  bool operator==(const Location&) const = default;
};

/// Four one-cell-per-row tables addressed by two hashes (h1 for tables 0-1,
/// h2 for 2-3) plus an overflow slot map. Stores handles, not tuples.
class HashIndex {
 public:
  explicit HashIndex(const HbsjConfig& cfg);

  Location insert(std::uint64_t key, std::uint32_t handle);
  void erase(Location loc);
  void clear();

  /// Calls fn(handle) for each cell holding `key`: tables 0..3, then overflow
  /// slots in slot order. Returns the number of occupied overflow slots scanned.
  template <class Fn>
  std::size_t probe(std::uint64_t key, Fn&& fn) const {
    const std::uint32_t r1 = row(hash_key(key, seed1_));
    const std::uint32_t r2 = row(hash_key(key, seed2_));
    const std::array<std::uint32_t, 4> rows{r1, r1, r2, r2};
    for (std::size_t t = 0; t < 4; ++t) {
      const Cell& c = tables_[t][rows[t]];
      if (c.used && c.key == key) fn(c.handle);
    }
    if (overflow_used_ == 0) return 0;
    std::size_t seen = 0;
    for (std::size_t s = 0; s < overflow_high_; ++s) {
      const Cell& c = overflow_[s];
      if (!c.used) continue;
      ++seen;
      if (c.key == key) fn(c.handle);
    }
    return seen;
  }

  std::size_t overflow_occupancy() const { return overflow_used_; }
  std::size_t table_occupancy() const { return table_used_; }

 private:
  struct Cell {
    bool used = false;
    std::uint32_t handle = 0;
    std::uint64_t key = 0;
  };

  std::uint32_t row(std::uint32_t h) const { return h & row_mask_; }

  std::uint32_t seed1_;
  std::uint32_t seed2_;
  std::uint32_t row_mask_;
  std::array<std::vector<Cell>, 4> tables_;
  std::vector<Cell> overflow_;
  std::vector<std::uint32_t> free_slots_;
  std::size_t overflow_high_ = 0;  // slots [0, high) have ever been used
  std::size_t overflow_used_ = 0;
  std::size_t table_used_ = 0;
};

/// Count-based sliding window over one stream with one HashIndex per key
/// field. Inserting into a full window first expires the oldest tuple.
class JoinWindow {
 public:
  JoinWindow(const HbsjConfig& cfg, std::vector<std::size_t> key_fields);

  struct InsertResult {
    std::optional<Tuple> expired;
  };

  InsertResult insert(const Tuple& t);
  /// Matches on index `idx` in probe order; `scanned` receives the occupied
  /// overflow slots visited.
  std::vector<const Tuple*> probe(std::size_t idx, std::uint64_t key, std::size_t* scanned = nullptr) const;
  void clear();

  std::size_t size() const { return live_; }
  std::size_t capacity() const { return ring_.size(); }
  std::size_t overflow_occupancy(std::size_t idx) const { return indexes_.at(idx).overflow_occupancy(); }
  std::size_t key_field(std::size_t idx) const { return key_fields_.at(idx); }
  /// Live tuples, oldest first.
  std::vector<Tuple> contents() const;

 private:
  struct Record {
    Tuple tuple;
    std::vector<Location> where;
  };

  std::vector<std::size_t> key_fields_;
  std::vector<HashIndex> indexes_;
  std::vector<Record> ring_;
  std::size_t next_ = 0;
  std::size_t live_ = 0;
};

/// The single-index case is a plain HB-SJ state.
inline JoinWindow make_hbsj_state(const HbsjConfig& cfg, std::size_t key_field) {
  return JoinWindow(cfg, {key_field});
}

}  // namespace diba::join
