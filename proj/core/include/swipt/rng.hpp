// SPDX-License-Identifier: Apache-2.0
//
// swipt-gbd: robust secure SWIPT resource allocation for distributed antennas
// Copyright (C) 2026 The swipt-gbd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>

#include "swipt/common.hpp"

namespace swipt {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// Stateless: the same (key, counter) always maps to the same block.
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key);

// Streams keyed on the experiment seed. Every random draw is addressed by
// (purpose, a, b, c) so adding receivers or antennas never shifts other draws.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  // Two uniforms in (0, 1) from one Philox block.
  std::array<double, 2> uniform2(std::uint32_t purpose, std::uint32_t a, std::uint32_t b,
                                 std::uint32_t c) const;
  // Two independent N(0, 1) via Box-Muller on uniform2.
  std::array<double, 2> normal2(std::uint32_t purpose, std::uint32_t a, std::uint32_t b,
                                std::uint32_t c) const;
  // CN(0, 1): (x + i y) / sqrt(2).
  cd complex_normal(std::uint32_t purpose, std::uint32_t a, std::uint32_t b,
                    std::uint32_t c) const;

 private:
  std::uint64_t seed_;
  PhiloxKey key_;
};

// Purposes used by the scenario generator.
enum RngPurpose : std::uint32_t {
  kPurposeIrPosition = 1,
  kPurposeErPosition = 2,
  kPurposeIrFading = 3,
  kPurposeErFading = 4,
  kPurposeCsiError = 5,
  kPurposeSampling = 6,
  kPurposeMasterInit = 7,
  kPurposeTest = 99,
};

}  // namespace swipt
