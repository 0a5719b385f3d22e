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
#include <string>
#include <string_view>

namespace diba {

/// Dates travel as day counts since 1992-01-01, the first TPC-H date.
std::uint32_t day_number(int year, unsigned month, unsigned day);
std::uint32_t parse_date(std::string_view text);
std::string format_date(std::uint32_t day);

}  // namespace diba
