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

#include <string>
#include <vector>

#include "swipt/conic/program.hpp"

namespace swipt::conic {

enum class SolveStatus { optimal, infeasible, numerical_failure };

const char* to_string(SolveStatus s);

struct SolverOptions {
  double rel_gap = 1e-8;     // stop when nu / t <= abs_gap + rel_gap * |objective|
  double abs_gap = 1e-12;
  double t_growth = 30.0;
  double newton_tol = 1e-11; // lambda^2 / 2
  int max_newton = 1500;
  // Safety ball ||x||_2 <= radius keeps phase I bounded. Never active in practice.
  double ball_radius = 1e6;
};

struct SolverResult {
  SolveStatus status = SolveStatus::numerical_failure;
  Vec x;
  double objective = 0.0;
  double gap = 0.0;                 // nu / t at exit
  std::vector<CMat> lmi_duals;      // Z for "constant + ... >= 0"
  Vec linear_duals;                 // y >= 0 for "a^T x <= rhs"
  Vec quadratic_duals;
  double phase1_value = 0.0;        // best max-violation slack reached in phase I
  int newton_iterations = 0;
  std::string message;
};

// Primal log-barrier path following with a phase I for a strictly feasible
// start. Duals are read off the central path: Z = S^{-1} / t, y = 1 / (t r).
// The infeasible status carries phase1_value > 0 as its certificate; callers
// fall back to an l1 relaxation to get usable cut multipliers.
SolverResult solve(const ConicProgram& program, const SolverOptions& options = {},
                   const Vec* start = nullptr);

}  // namespace swipt::conic
