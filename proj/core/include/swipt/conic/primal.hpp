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

#include "swipt/conic/barrier.hpp"
#include "swipt/conic/program.hpp"
#include "swipt/model.hpp"

namespace swipt::conic {

enum class EnergyMode {
  pooled,     // CP pools all sources, grid loss e^T B e
  per_rrh,    // each RRH lives on its own harvest, no sharing
  unlimited,  // no energy constraints
};

struct BuildOptions {
  EnergyMode energy = EnergyMode::pooled;
};

enum class ProgramKind { primal, l1_feasibility, sca_step };

// Reference to a robust constraint: an LMI, or a scalar row when eps = 0.
struct RobustRef {
  bool is_lmi = false;
  int index = -1;
  double g_norm = 1.0;  // congruence scaling diag(I, 1 / ||g_hat||)
  double row_scale = 1.0;
};

// Where every variable and constraint of a built program lives.
struct PrimalLayout {
  int n = 0, K = 0, L = 0, M = 0, nt = 0;
  std::vector<std::vector<int>> active;  // antenna indices carried by W_k
  std::vector<int> w_offset;             // -1 when W_k is empty
  int v_offset = -1;
  std::vector<int> e_var;                     // L + 1, -1 when fixed at 0
  std::vector<std::vector<int>> delta_var;    // [m][k], -1 when eps_m = 0
  std::vector<int> nu_var;                    // [m]
  std::vector<std::vector<int>> alpha_var;    // [l][k], l1 only
  std::vector<std::vector<int>> s_var;        // [l][k], SCA only
  std::vector<int> c1_row;
  double c1_scale = 1.0;
  std::vector<std::vector<RobustRef>> c2;  // [m][k]
  std::vector<RobustRef> c7;               // [m]
  int energy_quad = -1;                    // pooled mode
  double energy_scale = 1.0;
  std::vector<int> energy_row;             // per-RRH mode, [l]
  std::vector<double> energy_row_scale;
  std::vector<int> cap_row, nonneg_row;    // [i], -1 when e_i is fixed
  std::vector<int> tx_row;                 // [l]
  std::vector<std::vector<int>> sel_row;   // [l][k], -1 when eliminated
  std::vector<int> backhaul_row;           // [l], SCA only
  std::vector<std::vector<int>> delta_row; // [m][k]
  std::vector<int> nu_row;
  std::vector<int> w_psd;                  // LMI index, -1 when W_k is empty
  int v_psd = -1;
};

struct BuiltProgram {
  ProgramKind kind = ProgramKind::primal;
  ConicProgram program;
  PrimalLayout layout;
  model::Selection s;
};

// Fixed-selection primal. W_k only carries antennas of RRHs with s_{l,k} = 1.
BuiltProgram build_primal(const model::Scenario& sc, const model::Selection& s, const BuildOptions& opt = {});
// Same constraints with the selection constraint relaxed by alpha_{l,k} >= 0
// for every pair, minimizing sum alpha.
BuiltProgram build_l1_feasibility(const model::Scenario& sc, const model::Selection& s, const BuildOptions& opt = {});
// Continuous selection in [0, 1] with the backhaul cap and the linearized
// penalty phi * sum (s - anchor^2 - 2 anchor (s - anchor)).
BuiltProgram build_sca_step(const model::Scenario& sc, const Mat& anchor, double phi, const BuildOptions& opt = {});

// Multipliers in the units of the physical constraints.
struct DualCertificate {
  Vec sinr;                                // K
  std::vector<std::vector<CMat>> eavesdrop;  // [m][k], (N+1) x (N+1)
  std::vector<CMat> harvest;               // [m]
  double energy = 0.0;                     // pooled energy balance
  Vec energy_rrh;                          // rho * multiplier acting on Tr(. R_l)
  Vec energy_cap, energy_nonneg;           // L + 1
  Vec tx_power;                            // L
  Mat selection;                           // L x K, 0 where eliminated
  Mat delta_nonneg;                        // M x K
  Vec nu_nonneg;                           // M
  std::vector<CMat> beam_psd;              // K, N x N (zero outside active antennas)
  CMat an_psd;
  Vec backhaul;                            // L, SCA only
};

struct PrimalOutcome {
  SolveStatus status = SolveStatus::numerical_failure;
  double objective = 0.0;       // sum Tr(W_k) + Tr(V), or sum alpha for l1
  double power = 0.0;           // sum Tr(W_k) + Tr(V) in every program kind
  model::Policy policy;         // W lifted to N x N
  std::vector<std::vector<double>> delta;  // [m][k]
  std::vector<double> nu;
  Mat alpha;                    // l1 only, L x K
  Mat s_continuous;             // SCA only, L x K
  DualCertificate duals;
  SolverResult raw;
};

PrimalOutcome extract(const BuiltProgram& bp, const model::Scenario& sc, const SolverResult& r);
PrimalOutcome solve_program(const BuiltProgram& bp, const model::Scenario& sc, const SolverOptions& opt = {});
PrimalOutcome solve_primal(const model::Scenario& sc, const model::Selection& s, const SolverOptions& opt = {},
                           const BuildOptions& bopt = {});
PrimalOutcome solve_l1(const model::Scenario& sc, const model::Selection& s, const SolverOptions& opt = {},
                       const BuildOptions& bopt = {});

// Lagrangian stationarity matrix of W_k restricted to its active antennas:
// I + sum_m U (D_eav / gamma_tol - D_harv) U^H + sum_{j != k} a_j H_j + sum_l R_l w_l
CMat stationarity_matrix(const BuiltProgram& bp, const model::Scenario& sc, const DualCertificate& d, int k);

}  // namespace swipt::conic
