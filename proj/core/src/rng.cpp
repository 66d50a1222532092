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

#include "swipt/rng.hpp"

#include <numbers>

namespace swipt {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

// 53-bit uniform strictly inside (0, 1).
inline double to_open_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kW0;
      key[1] += kW1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kM0, ctr[0], hi0, lo0);
    mulhilo(kM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

CounterRng::CounterRng(std::uint64_t seed)
    : seed_(seed), key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

std::array<double, 2> CounterRng::uniform2(std::uint32_t purpose, std::uint32_t a, std::uint32_t b,
                                           std::uint32_t c) const {
  const PhiloxCounter out = philox4x32_10({purpose, a, b, c}, key_);
  return {to_open_unit(out[0], out[1]), to_open_unit(out[2], out[3])};
}

std::array<double, 2> CounterRng::normal2(std::uint32_t purpose, std::uint32_t a, std::uint32_t b,
                                          std::uint32_t c) const {
  const auto u = uniform2(purpose, a, b, c);
  const double r = std::sqrt(-2.0 * std::log(u[0]));
  const double th = 2.0 * std::numbers::pi * u[1];
  return {r * std::cos(th), r * std::sin(th)};
}

cd CounterRng::complex_normal(std::uint32_t purpose, std::uint32_t a, std::uint32_t b,
                              std::uint32_t c) const {
  const auto z = normal2(purpose, a, b, c);
  return cd(z[0], z[1]) / std::sqrt(2.0);
}

}  // namespace swipt
