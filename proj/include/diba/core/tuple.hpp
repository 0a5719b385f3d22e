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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diba/core/segment.hpp"
#include "diba/core/stream.hpp"

namespace diba {

struct Field {
  std::string name;
  unsigned width = 0;  // bits, 1..64

  bool operator==(const Field&) const = default;
};

/// Ordered list of fixed-width fields. Fields are packed MSB-first across the
/// concatenated 61-bit payloads and may straddle segment boundaries.
class TupleLayout {
 public:
  TupleLayout() = default;
  TupleLayout(std::string name, std::vector<Field> fields);

  const std::string& name() const { return name_; }
  std::span<const Field> fields() const { return fields_; }
  std::size_t field_count() const { return fields_.size(); }
  unsigned total_bits() const { return total_bits_; }
  std::size_t segment_count() const;

  std::optional<std::size_t> index_of(std::string_view field) const;
  /// Like index_of but throws ConfigError naming the missing field.
  std::size_t require(std::string_view field) const;

  bool operator==(const TupleLayout& o) const { return fields_ == o.fields_; }

 private:
  std::string name_;
  std::vector<Field> fields_;
  unsigned total_bits_ = 0;
};

/// Field values are positional, matching the layout the tuple is encoded with.
struct Tuple {
  StreamId stream;
  std::vector<std::uint64_t> values;

  bool operator==(const Tuple&) const = default;
  auto operator<=>(const Tuple&) const = default;
};

std::vector<Segment> encode_tuple(const Tuple& tuple, const TupleLayout& layout);
void encode_tuple_into(const Tuple& tuple, const TupleLayout& layout, std::vector<Segment>& out);
Tuple decode_tuple(std::span<const Segment> segments, const TupleLayout& layout);

/// The single-field layout used by END markers.
const TupleLayout& end_layout();
Tuple make_end();

}  // namespace diba
