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

#include <gtest/gtest.h>

#include <cmath>

#include "swipt/gbd.hpp"
#include "swipt/sca.hpp"
#include "swipt/scenario.hpp"

using namespace swipt;

TEST(Penalty, LinearizationMajorizesAndTouches) {
  std::srand(9);
  for (int t = 0; t < 200; ++t) {
    Mat s(2, 3), a(2, 3);
    for (int i = 0; i < 6; ++i) {
      s(i) = std::rand() / double(RAND_MAX);
      a(i) = std::rand() / double(RAND_MAX);
    }
    EXPECT_GE(sca::linearized_penalty(s, a, 3.0), sca::exact_penalty(s, 3.0) - 1e-12);
    EXPECT_NEAR(sca::linearized_penalty(a, a, 3.0), sca::exact_penalty(a, 3.0), 1e-12);
  }
}

TEST(Penalty, ExactPenaltyZeroAtBinary) {
  Mat s(1, 3);
  s << 0, 1, 1;
  EXPECT_DOUBLE_EQ(sca::exact_penalty(s, 5.0), 0.0);
  s << 0.5, 1, 0;
  EXPECT_DOUBLE_EQ(sca::exact_penalty(s, 4.0), 1.0);
  EXPECT_DOUBLE_EQ(sca::binary_gap(s), 0.5);
}

TEST(Sca, NeverBeatsGbdAndPenalizedDecreases) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto sc = scenario::generate(scenario::preset("tiny"), seed);
    const auto g = gbd::run_gbd(sc);
    const auto s = sca::run_sca(sc);
    EXPECT_GE(s.objective, g.objective * (1 - 1e-6)) << seed;
    for (size_t i = 1; i < s.penalized.size(); ++i) EXPECT_LE(s.penalized[i], s.penalized[i - 1] * (1 + 1e-6));
    EXPECT_TRUE(gbd::backhaul_feasible(s.s, sc));
    for (int k = 0; k < sc.num_ir; ++k) {
      int served = 0;
      for (int l = 0; l < sc.num_rrh; ++l) served += s.s.at(l, k);
      EXPECT_GE(served, 1);
    }
  }
}

TEST(Sca, DefaultPenaltyFactor) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 1);
  const auto s = sca::run_sca(sc);
  EXPECT_DOUBLE_EQ(s.phi, 10.0 * sc.p_tx_max[0]);
}

TEST(Sca, StepRejectsOutOfRangeAnchor) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 1);
  EXPECT_THROW(sca::sca_step(sc, Mat::Constant(2, 2, 1.5), 1.0), StructuralError);
}

TEST(Sca, StepWithZeroPenaltyLowerBoundsGbd) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 2);
  const auto relaxed = sca::sca_step(sc, Mat::Zero(2, 2), 0.0);
  ASSERT_EQ(relaxed.status, conic::SolveStatus::optimal);
  EXPECT_LE(relaxed.power, gbd::run_gbd(sc).objective * (1 + 1e-6));
}
