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

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "swipt/conic/primal.hpp"
#include "swipt/conic/rank_one.hpp"
#include "swipt/model.hpp"

namespace swipt::gbd {

enum class CutKind { optimality, feasibility };
const char* to_string(CutKind k);

// Affine cut in the selection. Optimality: mu >= constant + <coeff, s>.
// Feasibility: 0 >= constant + <coeff, s>.
struct Cut {
  CutKind kind = CutKind::optimality;
  double constant = 0.0;
  Mat coeff;  // L x K
  int origin_iter = 0;

  double evaluate(const model::Selection& s) const;
};

// Optimality cut from a fixed-selection primal solve. Pairs with s_t = 1 use
// the selection multipliers; pairs with s_t = 0 have no multiplier (their
// beams are eliminated), so they get the smallest slope that keeps the cut
// below global_lower_bound, a valid lower bound on every pattern's optimum.
// Transmit power is nonnegative, so 0 is always valid.
Cut optimality_cut(const conic::PrimalOutcome& outcome, const model::Selection& s_t, const model::Scenario& sc,
                   double global_lower_bound = 0.0, int origin_iter = 0);

// Feasibility cut from the l1 program: constant = sum alpha + <beta P, s_t>,
// coeff = -beta P. Throws StructuralError when sum alpha <= 0.
Cut feasibility_cut(const conic::PrimalOutcome& l1, const model::Selection& s_t, const model::Scenario& sc,
                    int origin_iter = 0);

// Excludes exactly s_t: 0 >= 1 - |s_t| + sum_{s_t = 1} s - sum_{s_t = 0} s.
Cut no_good_cut(const model::Selection& s_t, int origin_iter = 0);

enum class MasterMethod { automatic, enumerate, branch_and_bound };

struct MasterOptions {
  MasterMethod method = MasterMethod::automatic;
  int enumeration_limit = 20;   // automatic: enumerate when L * K <= limit
  double feasibility_tol = 1e-6;
  double tie_tol = 1e-9;        // relative, for the lexicographic tie-break
};

struct MasterResult {
  bool feasible = false;
  model::Selection s;
  double mu = -std::numeric_limits<double>::infinity();  // -inf without optimality cuts
  int nodes = 0;  // patterns visited or branch-and-bound nodes
};

// Minimizes mu over binary s subject to the cuts and the per-RRH backhaul cap
// sum_k s_{l,k} rate_k <= cap_l. Ties go to the lexicographically smallest s.
MasterResult solve_master(const std::vector<Cut>& cuts, const model::Scenario& sc, const MasterOptions& opt = {});
MasterResult solve_master(const std::vector<Cut>& cuts, int num_rrh, int num_ir, const std::vector<double>& rates,
                          const std::vector<double>& caps, const MasterOptions& opt = {});

// True when s satisfies the backhaul cap.
bool backhaul_feasible(const model::Selection& s, const model::Scenario& sc);

struct TraceRecord {
  int iter = 0;
  model::Selection s;
  std::string status;  // primal status of s, or "cut" for auxiliary solves
  double value = 0.0;  // primal objective, or sum alpha when infeasible
  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
};

struct RunTrace {
  std::vector<TraceRecord> records;
  std::string final_status;

  // Header "iter,UB,LB,status,s".
  std::string to_csv() const;
  void write_csv(const std::string& path) const;
};

enum class GbdStatus { optimal, iteration_limit, repeated_pattern };
const char* to_string(GbdStatus s);

struct GbdOptions {
  double kappa = 1e-3;          // termination gap
  bool kappa_relative = true;   // gap measured against |UB|
  int max_iter = 50;
  std::optional<model::Selection> initial;  // default all-ones
  conic::SolverOptions solver;
  conic::BuildOptions build;
  MasterOptions master;
  double infeasible_alpha = 1e-6;  // sum alpha above this marks the pattern infeasible
};

struct GbdResult {
  GbdStatus status = GbdStatus::optimal;
  double objective = 0.0;
  double lower_bound = 0.0;
  model::Selection s;
  model::Policy policy;
  std::vector<CVec> beams;
  conic::RecoveryReport recovery;
  RunTrace trace;
  std::vector<Cut> cuts;
  int iterations = 0;
};

// Benders iteration: fixed-selection primal, optimality or feasibility cut,
// master. Throws InfeasibleError when no selection admits a feasible policy.
GbdResult run_gbd(const model::Scenario& sc, const GbdOptions& opt = {});

// Seeded uniformly random selection for randomized starts.
model::Selection random_selection(int num_rrh, int num_ir, std::uint64_t seed);

}  // namespace swipt::gbd
