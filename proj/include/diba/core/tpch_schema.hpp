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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "diba/core/tuple.hpp"

namespace diba {

enum class MarketSegment : std::uint8_t {
  kAutomobile = 0,
  kBuilding = 1,
  kFurniture = 2,
  kHousehold = 3,
  kMachinery = 4,
};

std::optional<MarketSegment> parse_market_segment(std::string_view name);
std::string_view to_string(MarketSegment seg);

/// Price in cents times (100 - discount hundredths): units of 1e-4 dollars.
std::uint64_t compute_revenue(std::uint64_t price_cents, std::uint64_t discount_hundredths);
/// Revenue times (100 + tax hundredths): units of 1e-6 dollars.
std::uint64_t compute_charge(std::uint64_t price_cents, std::uint64_t discount_hundredths,
                             std::uint64_t tax_hundredths);

namespace layouts {
const TupleLayout& q3_lineitem();
const TupleLayout& q3_orders();
const TupleLayout& q3_customer();
const TupleLayout& q3_joined();
const TupleLayout& q3_group();
const TupleLayout& q1_lineitem();
const TupleLayout& q1_group();
}  // namespace layouts

struct Q3Params {
  MarketSegment segment = MarketSegment::kBuilding;
  std::uint32_t date = 0;  // day number, defaults to 1995-03-15 via q3_defaults()
  std::uint32_t limit = 10;
};
Q3Params q3_defaults();

struct Q1Params {
  std::uint32_t ship_cutoff = 0;  // l_shipdate <= cutoff
};
Q1Params q1_defaults();

}  // namespace diba
