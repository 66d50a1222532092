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

#include "swipt/lp.hpp"

using namespace swipt;

namespace {

// Brute-force oracle for two variables: best feasible vertex among all
// pairwise intersections of constraint lines (including the axes).
double vertex_oracle(const Mat& a, const Vec& b, const Vec& c, bool* feasible) {
  std::vector<Eigen::RowVector2d> rows;
  std::vector<double> rhs;
  for (int i = 0; i < a.rows(); ++i) {
    rows.emplace_back(a(i, 0), a(i, 1));
    rhs.push_back(b(i));
  }
  rows.emplace_back(-1.0, 0.0);
  rhs.push_back(0.0);
  rows.emplace_back(0.0, -1.0);
  rhs.push_back(0.0);
  double best = std::numeric_limits<double>::infinity();
  *feasible = false;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j) {
      Eigen::Matrix2d m;
      m << rows[i], rows[j];
      if (std::abs(m.determinant()) < 1e-12) continue;
      const Eigen::Vector2d x = m.inverse() * (Eigen::Vector2d(rhs[i], rhs[j]));
      bool ok = true;
      for (size_t r = 0; r < rows.size(); ++r) ok = ok && rows[r].dot(x) <= rhs[r] + 1e-9;
      if (ok) {
        *feasible = true;
        best = std::min(best, c.dot(x));
      }
    }
  return best;
}

}  // namespace

TEST(Lp, TextbookOptimum) {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6).
  Mat a(3, 2);
  a << 1, 0, 0, 2, 3, 2;
  Vec b(3);
  b << 4, 12, 18;
  Vec c(2);
  c << -3, -5;
  const auto r = lp::solve(a, b, c);
  ASSERT_EQ(r.status, lp::LpStatus::optimal);
  EXPECT_NEAR(r.value, -36.0, 1e-9);
  EXPECT_NEAR(r.x(0), 2.0, 1e-9);
  EXPECT_NEAR(r.x(1), 6.0, 1e-9);
}

TEST(Lp, NegativeRightHandSideNeedsPhaseOne) {
  // min x + y s.t. x + y >= 2, x <= 3.
  Mat a(2, 2);
  a << -1, -1, 1, 0;
  Vec b(2);
  b << -2, 3;
  Vec c(2);
  c << 1, 1;
  const auto r = lp::solve(a, b, c);
  ASSERT_EQ(r.status, lp::LpStatus::optimal);
  EXPECT_NEAR(r.value, 2.0, 1e-9);
}

TEST(Lp, Infeasible) {
  Mat a(2, 1);
  a << 1, -1;
  Vec b(2);
  b << 1, -2;
  Vec c(1);
  c << 1;
  EXPECT_EQ(lp::solve(a, b, c).status, lp::LpStatus::infeasible);
}

TEST(Lp, Unbounded) {
  Mat a(1, 2);
  a << 1, -1;
  Vec b(1);
  b << 1;
  Vec c(2);
  c << -1, 0;
  EXPECT_EQ(lp::solve(a, b, c).status, lp::LpStatus::unbounded);
}

TEST(Lp, RandomBoundedProblemsMatchVertexOracle) {
  std::srand(3);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + t % 4;
    Mat a(m + 2, 2);
    Vec b(m + 2);
    for (int i = 0; i < m; ++i) {
      a(i, 0) = (std::rand() % 21 - 10) / 5.0;
      a(i, 1) = (std::rand() % 21 - 10) / 5.0;
      b(i) = (std::rand() % 21 - 8) / 4.0;
    }
    a.row(m) << 1, 0;  // box keeps every instance bounded
    a.row(m + 1) << 0, 1;
    b(m) = b(m + 1) = 10.0;
    Vec c(2);
    c << (std::rand() % 21 - 10) / 5.0, (std::rand() % 21 - 10) / 5.0;
    bool feasible = false;
    const double want = vertex_oracle(a, b, c, &feasible);
    const auto r = lp::solve(a, b, c);
    if (!feasible) {
      EXPECT_EQ(r.status, lp::LpStatus::infeasible) << t;
    } else {
      ASSERT_EQ(r.status, lp::LpStatus::optimal) << t;
      EXPECT_NEAR(r.value, want, 1e-8) << t;
      EXPECT_LE((a * r.x - b).maxCoeff(), 1e-9);
      EXPECT_GE(r.x.minCoeff(), -1e-12);
    }
  }
}
