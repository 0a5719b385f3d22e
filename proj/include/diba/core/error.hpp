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

#include <stdexcept>
#include <string>

namespace diba {

/// Root of every error raised by the simulator.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad value or malformed bits in a segment, tuple or instruction codec.
class CodecError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration: topology, window sizes, cost model, plan.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Plan cannot be mapped onto the topology.
class PlacementError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Runtime protocol violation inside the simulated hardware.
class SimulationFault : public Error {
 public:
  using Error::Error;
};

}  // namespace diba
