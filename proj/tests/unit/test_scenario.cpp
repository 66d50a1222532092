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
#include <numbers>

#include "swipt/scenario.hpp"

using namespace swipt;

TEST(Scenario, DeterministicPerSeed) {
  const auto p = scenario::preset("desk");
  const auto a = scenario::generate(p, 11), b = scenario::generate(p, 11), c = scenario::generate(p, 12);
  EXPECT_TRUE(a.h[0].isApprox(b.h[0], 0.0));
  EXPECT_FALSE(a.h[0].isApprox(c.h[0], 1e-6));
}

TEST(Scenario, TinyDimensions) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 1);
  EXPECT_EQ(sc.num_rrh, 2);
  EXPECT_EQ(sc.num_ir, 2);
  EXPECT_EQ(sc.num_er, 1);
  EXPECT_EQ(sc.antennas_per_rrh, 2);
  EXPECT_EQ(sc.h[0].size(), 4);
  EXPECT_EQ(sc.e_max.size(), 3);
}

TEST(Scenario, PathGainFreeSpaceAnchor) {
  const double f = 915e6, lambda = 299792458.0 / f;
  const double at_ref = std::pow(lambda / (4 * std::numbers::pi), 2);
  EXPECT_NEAR(scenario::path_gain(1.0, f, 2.7, 1.0) / at_ref, 1.0, 1e-12);
  EXPECT_NEAR(scenario::path_gain(100.0, f, 2.7, 1.0) / (at_ref * std::pow(100.0, -2.7)), 1.0, 1e-12);
}

TEST(Scenario, CsiErrorRadius) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 3);
  const auto e = scenario::apply_csi_error(sc, 0.02);
  for (int m = 0; m < e.num_er; ++m) {
    EXPECT_NEAR(e.eps[m] * e.eps[m], 0.02 * e.g_hat[m].squaredNorm(), 1e-12 * e.g_hat[m].squaredNorm());
    EXPECT_TRUE(e.xi[m].isApprox(CMat::Identity(e.num_tx(), e.num_tx())));
  }
}

TEST(Scenario, GrowingAntennasKeepsExistingFading) {
  auto p = scenario::preset("tiny");
  const auto a = scenario::generate(p, 4);
  p.antennas_per_rrh = 3;
  const auto b = scenario::generate(p, 4);
  for (int k = 0; k < a.num_ir; ++k)
    for (int l = 0; l < a.num_rrh; ++l)
      for (int t = 0; t < 2; ++t) EXPECT_EQ(a.h[k](l * 2 + t), b.h[k](l * 3 + t));
}

TEST(Scenario, GridLossCalibration) {
  Vec e(3);
  e << 10.0, 20.0, 5.0;
  const Mat b = scenario::default_grid_loss(e, 0.05);
  EXPECT_NEAR(e.dot(b * e), 0.05 * e.sum(), 1e-9);
  EXPECT_GT(Eigen::SelfAdjointEigenSolver<Mat>(b).eigenvalues().minCoeff(), 0.0);
}

TEST(Scenario, ConfigRoundTrip) {
  auto p = scenario::preset("tiny");
  p.backhaul_max = 7.5;
  p.sigma_est_sq = 0.01;
  const auto q = scenario::parse_config(scenario::config_to_json(p));
  EXPECT_EQ(q.num_rrh, p.num_rrh);
  EXPECT_DOUBLE_EQ(q.backhaul_max, 7.5);
  EXPECT_DOUBLE_EQ(q.sigma_est_sq, 0.01);
  EXPECT_EQ(q.gamma_req_db, p.gamma_req_db);
}

TEST(Scenario, ConfigOverridesPreset) {
  const auto q = scenario::parse_config(R"({"preset": "tiny", "antennas_per_rrh": 3})");
  EXPECT_EQ(q.num_rrh, 2);
  EXPECT_EQ(q.antennas_per_rrh, 3);
}

TEST(Scenario, BadConfigIsStructural) {
  EXPECT_THROW(scenario::preset("nonexistent"), StructuralError);
  EXPECT_ANY_THROW(scenario::parse_config("{not json"));
}

TEST(Scenario, SyntheticProfileRange) {
  const auto prof = scenario::synthetic_profile();
  ASSERT_EQ(prof.solar.size(), 96u);
  for (int t = 0; t < 96; ++t) {
    EXPECT_GE(prof.solar[t], 0.0);
    EXPECT_LE(prof.solar[t], 1.0);
    EXPECT_GE(prof.wind[t], 0.3 - 1e-12);
    EXPECT_LE(prof.wind[t], 0.9 + 1e-12);
  }
  EXPECT_EQ(prof.solar[0], 0.0);
}

TEST(Scenario, SnapshotRoundTrip) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 6);
  const auto back = scenario::load_snapshot(scenario::snapshot_json(sc));
  EXPECT_TRUE(back.h[1].isApprox(sc.h[1], 1e-14));
  EXPECT_NEAR(back.eps[0], sc.eps[0], 1e-15 * sc.eps[0]);
}

TEST(Scenario, ColocatedSingleSite) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 2);
  const auto c = scenario::colocated(sc, 0.05);
  EXPECT_EQ(c.num_rrh, 1);
  EXPECT_EQ(c.antennas_per_rrh, 4);
  EXPECT_EQ(c.num_ir, sc.num_ir);
}
