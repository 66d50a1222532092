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

#include <stdexcept>
#include <vector>

#include "swipt/conic/primal.hpp"

namespace swipt::conic {

class RecoveryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RecoveryReport {
  std::vector<int> rank_before;         // numerical rank of each W_k from the solver
  std::vector<double> ratio_before;     // lambda_2 / lambda_max before recovery
  std::vector<double> ratio_after;
  std::vector<int> null_dim;            // dimension of the stationarity null space used
  double stationarity_mismatch = 0.0;   // max_k ||C_k - Z_k - a_k H_k / gamma_k|| / ||C_k||
  double moved_power = 0.0;             // trace moved from beams into artificial noise
  double objective_change = 0.0;        // relative
};

struct RecoveredPolicy {
  model::Policy policy;
  std::vector<CVec> beams;  // w_k with W_k = w_k w_k^H
  RecoveryReport report;
};

// Turns a relaxed optimum into rank-one beams. Null-space components of the
// stationarity matrix are moved from W_k into V (the total covariance and the
// objective are unchanged), then residual eigencomponents below rank_tol are
// moved the same way. The result is re-verified against every constraint and
// RecoveryError is thrown when verification fails at verify_tol.
RecoveredPolicy recover_rank_one(const BuiltProgram& bp, const model::Scenario& sc, const PrimalOutcome& out,
                                 double rank_tol = 1e-6, double verify_tol = 1e-6);

}  // namespace swipt::conic
