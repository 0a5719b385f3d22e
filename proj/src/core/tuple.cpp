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

#include "diba/core/tuple.hpp"

#include <fmt/format.h>

#include <unordered_set>

#include "diba/core/error.hpp"

namespace diba {

namespace {

constexpr std::uint64_t low_mask(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

TupleLayout::TupleLayout(std::string name, std::vector<Field> fields)
    : name_(std::move(name)), fields_(std::move(fields)) {
  if (fields_.empty()) throw ConfigError(fmt::format("layout '{}' has no fields", name_));
  std::unordered_set<std::string> seen;
  for (const auto& f : fields_) {
    if (f.width == 0 || f.width > 64)
      throw ConfigError(fmt::format("field '{}' in layout '{}' has width {}", f.name, name_, f.width));
    if (!seen.insert(f.name).second)
      throw ConfigError(fmt::format("duplicate field '{}' in layout '{}'", f.name, name_));
    total_bits_ += f.width;
  }
}

std::size_t TupleLayout::segment_count() const {
  return (total_bits_ + Segment::kPayloadBits - 1) / Segment::kPayloadBits;
}

std::optional<std::size_t> TupleLayout::index_of(std::string_view field) const {
  for (std::size_t i = 0; i < fields_.size(); ++i)
    if (fields_[i].name == field) return i;
  return std::nullopt;
}

std::size_t TupleLayout::require(std::string_view field) const {
  if (auto i = index_of(field)) return *i;
  throw ConfigError(fmt::format("layout '{}' has no field '{}'", name_, field));
}

void encode_tuple_into(const Tuple& tuple, const TupleLayout& layout, std::vector<Segment>& out) {
  if (!tuple.stream.is_data())
    throw CodecError(fmt::format("stream {} cannot carry tuples", tuple.stream.value));
  const auto fields = layout.fields();
  if (tuple.values.size() != fields.size())
    throw CodecError(fmt::format("tuple has {} values, layout '{}' has {} fields", tuple.values.size(),
                                 layout.name(), fields.size()));
  const std::size_t n = layout.segment_count();
  std::vector<std::uint64_t> payload(n, 0);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::uint64_t v = tuple.values[i];
    unsigned width = fields[i].width;
    if (v & ~low_mask(width))
      throw CodecError(fmt::format("value {} exceeds {}-bit field '{}'", v, width, fields[i].name));
    while (width > 0) {
      const std::size_t seg = pos / Segment::kPayloadBits;
      const unsigned off = static_cast<unsigned>(pos % Segment::kPayloadBits);
      const unsigned avail = Segment::kPayloadBits - off;
      const unsigned take = std::min(avail, width);
      const std::uint64_t chunk = (v >> (width - take)) & low_mask(take);
      payload[seg] |= chunk << (avail - take);
      pos += take;
      width -= take;
    }
  }
  out.reserve(out.size() + n);
  out.emplace_back(tuple.stream, payload[0]);
  for (std::size_t s = 1; s < n; ++s) out.emplace_back(streams::kNull, payload[s]);
}

std::vector<Segment> encode_tuple(const Tuple& tuple, const TupleLayout& layout) {
  std::vector<Segment> out;
  encode_tuple_into(tuple, layout, out);
  return out;
}

Tuple decode_tuple(std::span<const Segment> segments, const TupleLayout& layout) {
  const std::size_t n = layout.segment_count();
  if (segments.size() != n)
    throw CodecError(fmt::format("layout '{}' needs {} segments, got {}", layout.name(), n, segments.size()));
  if (!segments[0].tag().is_data())
    throw CodecError(fmt::format("first segment tag {} is not a data stream", segments[0].tag().value));
  for (std::size_t s = 1; s < n; ++s)
    if (!segments[s].is_continuation())
      throw CodecError(fmt::format("segment {} has tag {}, expected NULL continuation", s,
                                   segments[s].tag().value));
  Tuple t{segments[0].tag(), {}};
  t.values.reserve(layout.field_count());
  std::size_t pos = 0;
  for (const auto& f : layout.fields()) {
    std::uint64_t v = 0;
    unsigned width = f.width;
    while (width > 0) {
      const std::size_t seg = pos / Segment::kPayloadBits;
      const unsigned off = static_cast<unsigned>(pos % Segment::kPayloadBits);
      const unsigned avail = Segment::kPayloadBits - off;
      const unsigned take = std::min(avail, width);
      const std::uint64_t chunk = (segments[seg].payload() >> (avail - take)) & low_mask(take);
      v = take >= 64 ? chunk : (v << take) | chunk;
      pos += take;
      width -= take;
    }
    t.values.push_back(v);
  }
  return t;
}

const TupleLayout& end_layout() {
  static const TupleLayout layout("end", {{"marker", 8}});
  return layout;
}

Tuple make_end() { return Tuple{streams::kEnd, {0}}; }

}  // namespace diba
