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

#include <vector>

#include "swipt/conic/primal.hpp"
#include "swipt/conic/rank_one.hpp"
#include "swipt/gbd.hpp"
#include "swipt/model.hpp"

namespace swipt::sca {

// phi * (sum s - sum a^2 - 2 sum a (s - a)); majorizes phi * sum (s - s^2)
// with equality at s = a.
double linearized_penalty(const Mat& s, const Mat& anchor, double phi);
// phi * sum (s - s^2), zero exactly at binary points.
double exact_penalty(const Mat& s, double phi);
// max |s - round(s)|.
double binary_gap(const Mat& s);

// One convex step around the anchor, continuous s in [0, 1].
conic::PrimalOutcome sca_step(const model::Scenario& sc, const Mat& anchor, double phi,
                              const conic::SolverOptions& solver = {}, const conic::BuildOptions& build = {});

enum class AnchorRule {
  power_share,  // per-IR transmit power share of each RRH at the phi = 0 solution
  relaxed,      // the continuous s returned by the phi = 0 solve
};

struct ScaOptions {
  double phi = -1.0;   // <= 0 selects 10 * max_l P_tx_max[l]
  int max_iter = 30;
  double tol = 1e-4;   // relative change of the penalized objective
  double binary_tol = 1e-3;
  AnchorRule anchor = AnchorRule::power_share;
  conic::SolverOptions solver;
  conic::BuildOptions build;
};

struct ScaResult {
  double objective = 0.0;            // transmit power of the final fixed-s solve
  model::Selection s;
  model::Policy policy;
  std::vector<CVec> beams;
  conic::RecoveryReport recovery;
  gbd::RunTrace trace;               // UB = penalized objective, LB = transmit power
  std::vector<double> penalized;     // per penalized iteration
  std::vector<double> gaps;          // binary gap per penalized iteration
  Mat s_relaxed;                     // continuous s at termination
  int iterations = 0;
  int binary_iteration = -1;         // first iteration with gap <= binary_tol
  bool converged = false;
  bool repaired = false;             // rounding left an IR unserved or broke the backhaul cap
  double phi = 0.0;
};

// Penalized successive convex approximation followed by rounding, backhaul
// repair, a fixed-selection re-solve and rank-one recovery. Throws
// InfeasibleError when the relaxation or the rounded selection is infeasible.
ScaResult run_sca(const model::Scenario& sc, const ScaOptions& opt = {});

}  // namespace swipt::sca
