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

#include <cstdint>
#include <vector>

#include "swipt/model.hpp"
#include "swipt/rng.hpp"

namespace swipt::robust {

enum class Sense { maximize, minimize };

struct WorstCase {
  double value = 0.0;
  CVec delta;  // optimizing perturbation, delta^H xi delta <= eps^2
};

// Optimum of (g_hat + d)^H A (g_hat + d) over d^H xi d <= eps^2. Exact up to
// a secular-equation tolerance of 1e-12, including the hard case.
WorstCase worst_case_quadratic(const CMat& a, const CVec& g_hat, const CMat& xi, double eps, Sense sense);

enum class LmiKind { eavesdrop, harvest };

struct LmiBlock {
  CMat matrix;
  LmiKind kind = LmiKind::eavesdrop;
  int er = 0;
  int ir = -1;
  double multiplier = 0.0;
};

// U^H (V - W_k / gamma_tol) U + diag(delta xi, sigma_s^2 - delta eps^2), U = [I g_hat]
LmiBlock build_eavesdrop_lmi(const CMat& w_k, const CMat& v, const CVec& g_hat, const CMat& xi, double eps,
                             double gamma_tol, double sigma_s_sq, double delta, int er = 0, int ir = 0);
// U^H (sum W + V) U + diag(nu xi, -nu eps^2 - p_min / mu)
LmiBlock build_harvest_lmi(const std::vector<CMat>& w, const CMat& v, const CVec& g_hat, const CMat& xi,
                           double eps, double p_min, double mu, double nu, int er = 0);

struct SProcedureCheck {
  bool feasible = false;
  double multiplier = 0.0;       // best S-procedure multiplier found
  double min_eigenvalue = 0.0;   // lambda_min of the LMI at that multiplier
};

// Decides whether some multiplier >= 0 makes the LMI PSD, by maximizing the
// concave lambda_min(S(delta)) over the interval allowed by its last entry.
SProcedureCheck eavesdrop_lmi_feasible(const CMat& w_k, const CMat& v, const CVec& g_hat, const CMat& xi,
                                       double eps, double gamma_tol, double sigma_s_sq, double rel_tol = 1e-9);
SProcedureCheck harvest_lmi_feasible(const std::vector<CMat>& w, const CMat& v, const CVec& g_hat,
                                     const CMat& xi, double eps, double p_min, double mu, double rel_tol = 1e-9);

// max over the ball of the ER's SINR for IR k's message.
double worst_case_er_sinr(const CMat& w_k, const CMat& v, const CVec& g_hat, const CMat& xi, double eps,
                          double sigma_s_sq);
// min over the ball of mu (g)^H (sum W + V) g.
double worst_case_harvest(const std::vector<CMat>& w, const CMat& v, const CVec& g_hat, const CMat& xi,
                          double eps, double mu);

// Uniform draw from { d : d^H xi d <= eps^2 }.
CVec sample_in_ball(const CMat& xi, double eps, const CounterRng& rng, std::uint32_t a, std::uint32_t b);

struct RobustReport {
  std::vector<model::ConstraintSlack> entries;
  std::vector<std::vector<double>> worst_er_sinr;  // [m][k]
  std::vector<double> worst_harvest;               // [m], W
  double tol = 0.0;
  bool satisfied() const;
  std::string summary() const;
};

RobustReport verify_policy_robust(const model::Policy& p, const model::Scenario& sc, double tol = 1e-6);

}  // namespace swipt::robust
