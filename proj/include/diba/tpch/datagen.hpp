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
#include <filesystem>

#include "diba/tpch/tbl.hpp"

namespace diba::tpch {

struct DatasetSpec {
  std::uint64_t seed = 0xD1BA;
  std::size_t customers = 50;
  std::size_t orders = 200;
  std::size_t lineitems = 1000;
};

struct Dataset {
  Table customer{TableKind::kCustomer, {}};
  Table orders{TableKind::kOrders, {}};
  Table lineitem{TableKind::kLineitem, {}};
};

/// DBGen-shaped synthetic data. Byte-identical for equal specs.
Dataset generate_dataset(const DatasetSpec& spec);
void write_dataset(const Dataset& d, const std::filesystem::path& dir);
Dataset load_dataset(const std::filesystem::path& dir);

}  // namespace diba::tpch
