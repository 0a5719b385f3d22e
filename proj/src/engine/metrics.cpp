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

#include "diba/engine/metrics.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "diba/core/error.hpp"

namespace diba::engine {

void MetricsRecorder::Acc::add(double v, std::uint64_t times) {
  if (times == 0) return;
  if (n == 0) {
    min = max = v;
  } else {
    min = std::min(min, v);
    max = std::max(max, v);
  }
  sum += v * static_cast<double>(times);
  n += times;
}

Stat MetricsRecorder::Acc::stat() const {
  if (n == 0) return {};
  return Stat{min, sum / static_cast<double>(n), max};
}

MetricsRecorder::MetricsRecorder(std::uint64_t bucket_cycles, std::size_t indexes)
    : bucket_cycles_(bucket_cycles), window_cycles_(std::max<std::uint64_t>(1, bucket_cycles / 100)),
      indexes_(indexes), occ_(indexes) {
  if (bucket_cycles == 0) throw ConfigError("bucket size must be positive");
}

void MetricsRecorder::record(std::uint64_t cycles, std::uint64_t tuples, std::span<const std::size_t> occupancy) {
  while (cycles > 0) {
    const std::uint64_t step =
        std::min({cycles, window_cycles_ - in_window_, bucket_cycles_ - in_bucket_});
    window_tuples_ += tuples;
    tuples = 0;
    for (std::size_t i = 0; i < indexes_; ++i)
      occ_[i].add(i < occupancy.size() ? static_cast<double>(occupancy[i]) : 0.0, step);
    in_window_ += step;
    in_bucket_ += step;
    cycles -= step;
    if (in_window_ == window_cycles_) close_window();
    if (in_bucket_ == bucket_cycles_) close_bucket();
  }
}

void MetricsRecorder::close_window() {
  input_.add(static_cast<double>(window_tuples_), 1);
  window_tuples_ = 0;
  in_window_ = 0;
}

void MetricsRecorder::close_bucket() {
  if (in_window_ > 0) close_window();
  BucketRow row;
  row.bucket = rows_.size();
  row.cycles = in_bucket_;
  row.input = input_.stat();
  for (const auto& a : occ_) row.overflow.push_back(a.stat());
  rows_.push_back(std::move(row));
  input_ = Acc{};
  for (auto& a : occ_) a = Acc{};
  in_bucket_ = 0;
}

std::vector<BucketRow> MetricsRecorder::finish() {
  if (in_bucket_ > 0) close_bucket();
  return std::move(rows_);
}

std::vector<BucketRow> combine_runs(std::span<const std::vector<BucketRow>> runs) {
  std::vector<BucketRow> out;
  std::vector<std::size_t> seen;
  auto merge = [](Stat& into, const Stat& s, std::size_t n) {
    if (n == 0) {
      into = s;
      return;
    }
    into.min = std::min(into.min, s.min);
    into.max = std::max(into.max, s.max);
    into.avg += (s.avg - into.avg) / static_cast<double>(n + 1);
  };
  for (const auto& run : runs) {
    for (std::size_t b = 0; b < run.size(); ++b) {
      const auto& r = run[b];
      if (b == out.size()) {
        out.push_back(r);
        seen.push_back(1);
        continue;
      }
      auto& o = out[b];
      o.cycles = std::max(o.cycles, r.cycles);
      merge(o.input, r.input, seen[b]);
      if (o.overflow.size() != r.overflow.size()) throw ConfigError("runs disagree on index count");
      for (std::size_t i = 0; i < r.overflow.size(); ++i) merge(o.overflow[i], r.overflow[i], seen[b]);
      ++seen[b];
    }
  }
  return out;
}

void write_metrics_csv(std::ostream& os, std::span<const BucketRow> rows, std::span<const std::string> names) {
  os << "bucket,input_min,input_avg,input_max";
  for (const char* what : {"avg", "min", "max"})
    for (const auto& n : names) os << ",ovf_" << n << '_' << what;
  os << '\n';
  for (const auto& r : rows) {
    os << fmt::format("{},{:.0f},{:.3f},{:.0f}", r.bucket, r.input.min, r.input.avg, r.input.max);
    for (std::size_t i = 0; i < names.size(); ++i)
      os << fmt::format(",{:.3f}", i < r.overflow.size() ? r.overflow[i].avg : 0.0);
    for (std::size_t i = 0; i < names.size(); ++i)
      os << fmt::format(",{:.0f}", i < r.overflow.size() ? r.overflow[i].min : 0.0);
    for (std::size_t i = 0; i < names.size(); ++i)
      os << fmt::format(",{:.0f}", i < r.overflow.size() ? r.overflow[i].max : 0.0);
    os << '\n';
  }
}

}  // namespace diba::engine
