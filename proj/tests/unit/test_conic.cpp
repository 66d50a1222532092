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

#include "swipt/conic/barrier.hpp"
#include "swipt/conic/embedding.hpp"
#include "swipt/conic/primal.hpp"
#include "swipt/conic/program.hpp"
#include "swipt/conic/rank_one.hpp"
#include "swipt/rng.hpp"
#include "swipt/scenario.hpp"

using namespace swipt;

namespace {

CMat random_hermitian(int n, std::uint32_t a) {
  const CounterRng rng(101);
  CMat f(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f(i, j) = rng.complex_normal(kPurposeTest, a, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  return 0.5 * (f + f.adjoint());
}

// min Re Tr(C X) s.t. Tr X <= 1, X PSD.
conic::ConicProgram trace_program(const CMat& c, double trace_cap) {
  const int n = static_cast<int>(c.rows());
  conic::ConicProgram p;
  const int off = p.add_hermitian("X", n);
  p.finalize();
  p.objective.segment(off, conic::hermitian_dim(n)) = conic::hermitian_coords(c);
  conic::LinearConstraint tr;
  tr.tag = "trace";
  tr.a = Vec::Zero(p.num_vars);
  tr.a.segment(off, conic::hermitian_dim(n)) = conic::hermitian_coords(CMat::Identity(n, n));
  tr.rhs = trace_cap;
  p.linear.push_back(tr);
  conic::LmiConstraint psd;
  psd.tag = "psd";
  psd.constant = CMat::Zero(n, n);
  psd.matrices.push_back({off, n, 1.0, CMat::Identity(n, n)});
  p.lmis.push_back(psd);
  p.finalize();
  return p;
}

}  // namespace

TEST(Hermitian, CoordinatesRoundTripAndIsometry) {
  for (int n : {1, 2, 4}) {
    const CMat a = random_hermitian(n, 1), b = random_hermitian(n, 2);
    const Vec xa = conic::hermitian_coords(a), xb = conic::hermitian_coords(b);
    EXPECT_EQ(xa.size(), n * n);
    EXPECT_TRUE(conic::hermitian_from_coords(xa, n).isApprox(a, 1e-14));
    EXPECT_NEAR(xa.dot(xb), (a * b).trace().real(), 1e-12);
  }
}

TEST(Hermitian, BasisPicksCoordinate) {
  const int n = 3;
  const CMat a = random_hermitian(n, 3);
  const Vec x = conic::hermitian_coords(a);
  for (int p = 0; p < n * n; ++p) EXPECT_NEAR((conic::hermitian_basis(n, p) * a).trace().real(), x(p), 1e-12);
}

TEST(Embedding, RealEmbeddingPreservesSpectrum) {
  const CMat a = random_hermitian(3, 4);
  const Mat r = conic::real_embed(a);
  ASSERT_EQ(r.rows(), 6);
  EXPECT_TRUE(conic::real_unembed(r).isApprox(a, 1e-14));
  const auto ev = Eigen::SelfAdjointEigenSolver<CMat>(a).eigenvalues();
  const auto er = Eigen::SelfAdjointEigenSolver<Mat>(r).eigenvalues();
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(er(2 * i), ev(i), 1e-12);
    EXPECT_NEAR(er(2 * i + 1), ev(i), 1e-12);
  }
}

TEST(Barrier, TraceProgramReachesMinEigenvalue) {
  CMat c = random_hermitian(3, 5);
  const double lmin = Eigen::SelfAdjointEigenSolver<CMat>(c).eigenvalues()(0);
  ASSERT_LT(lmin, 0.0);
  const auto r = conic::solve(trace_program(c, 1.0));
  ASSERT_EQ(r.status, conic::SolveStatus::optimal) << r.message;
  EXPECT_NEAR(r.objective, lmin, 1e-7 * (1 + std::abs(lmin)));
}

TEST(Barrier, DetectsInfeasibility) {
  const CMat c = CMat::Identity(2, 2);
  const auto r = conic::solve(trace_program(c, -1.0));
  EXPECT_EQ(r.status, conic::SolveStatus::infeasible);
  EXPECT_GT(r.phase1_value, 0.0);
}

TEST(Barrier, LinearDualsCertifyOptimum) {
  // min -x - 2y s.t. x + y <= 1, x >= 0, y >= 0 via linear rows; duals give
  // the objective through c = -A^T y.
  conic::ConicProgram p;
  const int x = p.add_scalar("x"), y = p.add_scalar("y");
  p.finalize();
  p.objective(x) = -1.0;
  p.objective(y) = -2.0;
  auto row = [&](Vec a, double rhs) { p.linear.push_back({"r", std::move(a), rhs}); };
  Vec a(2);
  a << 1, 1;
  row(a, 1.0);
  a << -1, 0;
  row(a, 0.0);
  a << 0, -1;
  row(a, 0.0);
  const auto r = conic::solve(p);
  ASSERT_EQ(r.status, conic::SolveStatus::optimal);
  EXPECT_NEAR(r.objective, -2.0, 1e-7);
  EXPECT_NEAR(r.linear_duals(0), 2.0, 1e-5);
  EXPECT_NEAR(r.linear_duals(1), 1.0, 1e-5);
}

TEST(Primal, TinySolutionIsFeasibleWithActiveSinr) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 2);
  const auto ones = model::Selection::all_ones(2, 2);
  const auto bp = conic::build_primal(sc, ones);
  const auto out = conic::solve_program(bp, sc);
  ASSERT_EQ(out.status, conic::SolveStatus::optimal);
  EXPECT_NEAR(out.objective, out.policy.objective(), 1e-9 * out.objective);
  // Power minimization makes every SINR constraint tight.
  for (int k = 0; k < 2; ++k) {
    EXPECT_NEAR(model::sinr_ir(out.policy, sc, k) / sc.gamma_req[k], 1.0, 1e-4);
    EXPECT_GT(out.duals.sinr(k), 0.0);
  }
}

TEST(Primal, RemovingRrhCannotLowerPower) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 2);
  const auto full = conic::solve_primal(sc, model::Selection::all_ones(2, 2));
  const auto part = conic::solve_primal(sc, model::Selection::from_bitstring(2, 2, "1101"));
  ASSERT_EQ(full.status, conic::SolveStatus::optimal);
  if (part.status == conic::SolveStatus::optimal) EXPECT_GE(part.objective, full.objective * (1 - 1e-7));
}

TEST(Primal, EmptySelectionIsInfeasible) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 2);
  EXPECT_EQ(conic::solve_primal(sc, model::Selection(2, 2, 0)).status, conic::SolveStatus::infeasible);
}

TEST(Primal, L1ProgramMeasuresInfeasibility) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 2);
  const auto feas = conic::solve_l1(sc, model::Selection::all_ones(2, 2));
  ASSERT_EQ(feas.status, conic::SolveStatus::optimal);
  EXPECT_LT(feas.objective, 1e-6);
  const auto inf = conic::solve_l1(sc, model::Selection(2, 2, 0));
  ASSERT_EQ(inf.status, conic::SolveStatus::optimal);
  EXPECT_GT(inf.objective, 1e-3);
}

TEST(RankOne, RecoveredBeamsAreRankOne) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto sc = scenario::generate(scenario::preset("tiny"), seed);
    const auto ones = model::Selection::all_ones(2, 2);
    const auto bp = conic::build_primal(sc, ones);
    const auto out = conic::solve_program(bp, sc);
    ASSERT_EQ(out.status, conic::SolveStatus::optimal);
    const auto rec = conic::recover_rank_one(bp, sc, out);
    for (int k = 0; k < 2; ++k) {
      const auto ev = Eigen::SelfAdjointEigenSolver<CMat>(rec.policy.w[k]).eigenvalues();
      EXPECT_LE(ev(ev.size() - 2), 1e-6 * ev(ev.size() - 1));
      EXPECT_TRUE((rec.beams[k] * rec.beams[k].adjoint()).isApprox(rec.policy.w[k], 1e-9));
    }
    EXPECT_LE(std::abs(rec.policy.objective() - out.objective), 1e-6 * out.objective);
  }
}
