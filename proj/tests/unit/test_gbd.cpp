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
#include <sstream>

#include "swipt/conic/primal.hpp"
#include "swipt/gbd.hpp"
#include "swipt/scenario.hpp"

using namespace swipt;

namespace {

model::Selection from_mask(int l, int k, int mask) {
  model::Selection s(l, k, 0);
  for (int i = 0; i < l * k; ++i) s.bits[static_cast<size_t>(i)] = (mask >> i) & 1;
  return s;
}

std::vector<gbd::Cut> random_cuts(int l, int k, int count, unsigned seed) {
  std::srand(seed);
  std::vector<gbd::Cut> cuts;
  for (int c = 0; c < count; ++c) {
    gbd::Cut cut;
    cut.kind = c % 3 == 2 ? gbd::CutKind::feasibility : gbd::CutKind::optimality;
    cut.coeff = Mat(l, k);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < k; ++j) cut.coeff(i, j) = (std::rand() % 2001 - 1000) / 250.0;
    cut.constant = cut.kind == gbd::CutKind::optimality ? (std::rand() % 1000) / 100.0 : -(std::rand() % 400) / 100.0;
    cuts.push_back(cut);
  }
  return cuts;
}

// Exhaustive oracle with the same lexicographic tie-break.
gbd::MasterResult brute_master(const std::vector<gbd::Cut>& cuts, int l, int k, const std::vector<double>& rates,
                               const std::vector<double>& caps) {
  gbd::MasterResult best;
  for (int mask = 0; mask < (1 << (l * k)); ++mask) {
    const auto s = from_mask(l, k, mask);
    bool ok = true;
    for (int r = 0; r < l && ok; ++r) {
      double use = 0.0;
      for (int j = 0; j < k; ++j) use += s.at(r, j) * rates[j];
      ok = use <= caps[r] + 1e-12;
    }
    double mu = -std::numeric_limits<double>::infinity();
    for (const auto& c : cuts) {
      const double v = c.evaluate(s);
      if (c.kind == gbd::CutKind::feasibility)
        ok = ok && v <= 1e-6;
      else
        mu = std::max(mu, v);
    }
    if (!ok) continue;
    if (!best.feasible || mu < best.mu - 1e-9 * std::max(1.0, std::abs(mu)) ||
        (std::abs(mu - best.mu) <= 1e-9 * std::max(1.0, std::abs(mu)) && s < best.s)) {
      best.feasible = true;
      best.mu = mu;
      best.s = s;
    }
  }
  return best;
}

}  // namespace

TEST(Cut, EvaluateIsAffine) {
  gbd::Cut c;
  c.constant = 1.5;
  c.coeff = Mat(2, 2);
  c.coeff << 1, -2, 0.5, 3;
  EXPECT_DOUBLE_EQ(c.evaluate(model::Selection::from_bitstring(2, 2, "1011")), 1.5 + 1 + 0.5 + 3);
}

TEST(Cut, NoGoodExcludesExactlyItsPattern) {
  const auto t = model::Selection::from_bitstring(2, 3, "101100");
  const auto cut = gbd::no_good_cut(t);
  for (int mask = 0; mask < 64; ++mask) {
    const auto s = from_mask(2, 3, mask);
    EXPECT_EQ(cut.evaluate(s) > 0.5, s == t) << s.bitstring();
  }
}

TEST(Master, MatchesBruteForceEnumerate) {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    const int l = 2, k = 3;
    const auto cuts = random_cuts(l, k, 6, seed);
    const std::vector<double> rates{1.0, 1.5, 2.0}, caps{3.0, 2.5};
    gbd::MasterOptions opt;
    opt.method = gbd::MasterMethod::enumerate;
    const auto got = gbd::solve_master(cuts, l, k, rates, caps, opt);
    const auto want = brute_master(cuts, l, k, rates, caps);
    ASSERT_EQ(got.feasible, want.feasible) << seed;
    if (want.feasible) {
      EXPECT_NEAR(got.mu, want.mu, 1e-9 * std::max(1.0, std::abs(want.mu))) << seed;
      EXPECT_EQ(got.s, want.s) << seed;
    }
  }
}

TEST(Master, BranchAndBoundMatchesBruteForce) {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    const int l = 3, k = 4;
    const auto cuts = random_cuts(l, k, 8, 100 + seed);
    const std::vector<double> rates{1.0, 1.5, 2.0, 0.7}, caps{3.0, 2.5, 4.0};
    gbd::MasterOptions opt;
    opt.method = gbd::MasterMethod::branch_and_bound;
    const auto got = gbd::solve_master(cuts, l, k, rates, caps, opt);
    const auto want = brute_master(cuts, l, k, rates, caps);
    ASSERT_EQ(got.feasible, want.feasible) << seed;
    if (want.feasible) EXPECT_NEAR(got.mu, want.mu, 1e-7 * std::max(1.0, std::abs(want.mu))) << seed;
  }
}

TEST(Master, RespectsBackhaulCap) {
  const std::vector<double> rates{2.0, 2.0}, caps{2.5, 2.5};
  const auto r = gbd::solve_master({}, 2, 2, rates, caps);
  ASSERT_TRUE(r.feasible);
  for (int l = 0; l < 2; ++l) EXPECT_LE(r.s.at(l, 0) + r.s.at(l, 1), 1);
  EXPECT_EQ(r.s, model::Selection(2, 2, 0));  // lexicographic tie-break
}

TEST(Gbd, TinyMatchesExhaustivePatternSearch) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 2);
  double best = std::numeric_limits<double>::infinity();
  for (int mask = 0; mask < 16; ++mask) {
    const auto s = from_mask(2, 2, mask);
    if (!gbd::backhaul_feasible(s, sc)) continue;
    const auto out = conic::solve_primal(sc, s);
    if (out.status == conic::SolveStatus::optimal) best = std::min(best, out.objective);
  }
  gbd::GbdOptions opt;
  opt.kappa = 1e-4;
  const auto r = gbd::run_gbd(sc, opt);
  EXPECT_EQ(r.status, gbd::GbdStatus::optimal);
  EXPECT_NEAR(r.objective, best, 1e-4 * best);
  EXPECT_LE(r.lower_bound, r.objective * (1 + 1e-9));
  EXPECT_TRUE(gbd::backhaul_feasible(r.s, sc));
  EXPECT_LE(r.iterations, 18);
}

TEST(Gbd, TraceCsvHeaderAndRows) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 3);
  const auto r = gbd::run_gbd(sc);
  const std::string csv = r.trace.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "iter,UB,LB,status,s");
  EXPECT_EQ(static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n')), r.trace.records.size() + 1);
  for (size_t i = 1; i < r.trace.records.size(); ++i) {
    EXPECT_LE(r.trace.records[i].ub, r.trace.records[i - 1].ub);
    EXPECT_GE(r.trace.records[i].lb, r.trace.records[i - 1].lb);
  }
}

TEST(Gbd, InfeasibleInstanceThrows) {
  // Seed 9 of the tiny preset cannot meet its targets even with full cooperation.
  const auto sc = scenario::generate(scenario::preset("tiny"), 9);
  EXPECT_EQ(conic::solve_primal(sc, model::Selection::all_ones(2, 2)).status, conic::SolveStatus::infeasible);
  EXPECT_THROW(gbd::run_gbd(sc), InfeasibleError);
}

TEST(Gbd, BadOptionsAreStructural) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 1);
  gbd::GbdOptions opt;
  opt.kappa = -1.0;
  EXPECT_THROW(gbd::run_gbd(sc, opt), StructuralError);
}

TEST(Gbd, CutsUnderestimateEveryFeasiblePattern) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 4);
  const auto r = gbd::run_gbd(sc);
  for (int mask = 0; mask < 16; ++mask) {
    const auto s = from_mask(2, 2, mask);
    const auto out = conic::solve_primal(sc, s);
    for (const auto& c : r.cuts) {
      if (out.status == conic::SolveStatus::optimal) {
        if (c.kind == gbd::CutKind::optimality) EXPECT_LE(c.evaluate(s), out.objective + 1e-5);
        if (c.kind == gbd::CutKind::feasibility) EXPECT_LE(c.evaluate(s), 1e-6);
      }
    }
  }
}

TEST(Gbd, RandomSelectionDeterministic) {
  EXPECT_EQ(gbd::random_selection(3, 3, 5), gbd::random_selection(3, 3, 5));
  EXPECT_EQ(gbd::random_selection(3, 3, 5).size(), 9);
}
