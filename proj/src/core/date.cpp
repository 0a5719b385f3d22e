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

#include "diba/core/date.hpp"

#include <fmt/format.h>

#include <charconv>
#include <chrono>

#include "diba/core/error.hpp"

namespace diba {

namespace {

constexpr std::chrono::sys_days kEpoch{std::chrono::year{1992} / std::chrono::January / 1};

}  // namespace

std::uint32_t day_number(int year, unsigned month, unsigned day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
  if (!ymd.ok()) throw ParseError(fmt::format("invalid date {}-{}-{}", year, month, day));
  const auto days = (std::chrono::sys_days{ymd} - kEpoch).count();
  if (days < 0 || days > 0xFFFF) throw ParseError(fmt::format("date {}-{}-{} outside 16-bit day range", year, month, day));
  return static_cast<std::uint32_t>(days);
}

std::uint32_t parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-')
    throw ParseError(fmt::format("malformed date '{}'", text));
  auto num = [&](std::size_t at, std::size_t len) {
    int v = 0;
    auto [p, ec] = std::from_chars(text.data() + at, text.data() + at + len, v);
    if (ec != std::errc{} || p != text.data() + at + len) throw ParseError(fmt::format("malformed date '{}'", text));
    return v;
  };
  return day_number(num(0, 4), static_cast<unsigned>(num(5, 2)), static_cast<unsigned>(num(8, 2)));
}

std::string format_date(std::uint32_t day) {
  const std::chrono::year_month_day ymd{kEpoch + std::chrono::days{day}};
  return fmt::format("{:04}-{:02}-{:02}", static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                     static_cast<unsigned>(ymd.day()));
}

}  // namespace diba
