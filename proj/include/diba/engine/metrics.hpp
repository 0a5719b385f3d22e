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

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace diba::engine {

struct Stat {
  double min = 0;
  double avg = 0;
  double max = 0;
};

/// One sampling bucket. Input counts are tuples accepted at the input port
/// per sub-window (a hundredth of the bucket); occupancy is sampled every cycle.
struct BucketRow {
  std::uint64_t bucket = 0;
  std::uint64_t cycles = 0;
  Stat input;
  std::vector<Stat> overflow;  // one per index
};

class MetricsRecorder {
 public:
  MetricsRecorder(std::uint64_t bucket_cycles, std::size_t indexes);

  /// `cycles` consecutive identical cycles; `tuples` arrivals in the first of them.
  void record(std::uint64_t cycles, std::uint64_t tuples, std::span<const std::size_t> occupancy);
  std::vector<BucketRow> finish();
  std::uint64_t cycles_to_boundary() const { return bucket_cycles_ - in_bucket_; }

 private:
  struct Acc {
    double min = 0, max = 0, sum = 0;
    std::uint64_t n = 0;
    void add(double v, std::uint64_t times);
    Stat stat() const;
  };

  void close_window();
  void close_bucket();

  std::uint64_t bucket_cycles_;
  std::uint64_t window_cycles_;
  std::size_t indexes_;
  std::uint64_t in_bucket_ = 0;
  std::uint64_t in_window_ = 0;
  std::uint64_t window_tuples_ = 0;
  Acc input_;
  std::vector<Acc> occ_;
  std::vector<BucketRow> rows_;
};

/// Merges repeated runs bucket by bucket: lowest min, mean avg, highest max.
std::vector<BucketRow> combine_runs(std::span<const std::vector<BucketRow>> runs);

/// Writes `bucket,input_min,input_avg,input_max`, then ovf_<idx>_avg for every
/// index, then the _min group and the _max group.

void write_metrics_csv(std::ostream& os, std::span<const BucketRow> rows, std::span<const std::string> index_names);

}  // namespace diba::engine
