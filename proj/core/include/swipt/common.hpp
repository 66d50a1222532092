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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace swipt {

using cd = std::complex<double>;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Thrown for malformed inputs: wrong dimensions, non-PD matrices, bad config.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when no policy satisfies the constraints of an instance.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

// Smallest eigenvalue of a Hermitian matrix (0 for an empty matrix).
double min_eigenvalue(const CMat& a);
double max_eigenvalue(const CMat& a);

// Number of eigenvalues above rel_tol * lambda_max.
int numerical_rank(const CMat& a, double rel_tol);

// Hermitian part (A + A^H) / 2.
CMat hermitian_part(const CMat& a);

// Principal square root of a Hermitian positive definite matrix and its inverse.
CMat sqrtm_pd(const CMat& a);
CMat inv_sqrtm_pd(const CMat& a);

bool is_positive_definite(const CMat& a);

}  // namespace swipt
