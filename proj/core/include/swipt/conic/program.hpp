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

#include "swipt/common.hpp"

namespace swipt::conic {

// Real coordinates of an n x n Hermitian matrix, orthonormal under
// <A, B> = Re Tr(A B). Layout: n diagonal entries, then for each pair a < b
// (row-major) the scaled real part and the scaled imaginary part.
//   X_aa = x_a,  X_ab = (x_re + i x_im) / sqrt(2)
int hermitian_dim(int n);
Vec hermitian_coords(const CMat& h);
CMat hermitian_from_coords(const Eigen::Ref<const Vec>& x, int n);
// Basis element E_p such that Re Tr(E_p X) = x_p.
CMat hermitian_basis(int n, int p);

// scale * lift^H X lift, X being the Hermitian variable at [offset, offset + n^2).
struct MatrixTerm {
  int offset = 0;
  int n = 0;
  double scale = 1.0;
  CMat lift;  // n x d
};

// x[var] * coeff
struct ScalarTerm {
  int var = 0;
  CMat coeff;
};

// constant + sum scalars + sum matrices >= 0
struct LmiConstraint {
  std::string tag;
  CMat constant;
  std::vector<ScalarTerm> scalars;
  std::vector<MatrixTerm> matrices;
  int dim() const { return static_cast<int>(constant.rows()); }
  CMat evaluate(const Vec& x) const;
};

// a^T x <= rhs
struct LinearConstraint {
  std::string tag;
  Vec a;
  double rhs = 0.0;
};

// x_S^T Q x_S + a^T x <= rhs, Q positive semidefinite
struct QuadraticConstraint {
  std::string tag;
  std::vector<int> vars;
  Mat q;
  Vec a;
  double rhs = 0.0;
  double evaluate(const Vec& x) const;
};

struct VarGroup {
  std::string name;
  int offset = 0;
  int size = 0;
  int hermitian_n = 0;  // > 0 when the group holds Hermitian coordinates
};

// minimize objective^T x + objective_offset subject to the constraint lists.
struct ConicProgram {
  int num_vars = 0;
  Vec objective;
  double objective_offset = 0.0;
  std::vector<VarGroup> groups;
  std::vector<LmiConstraint> lmis;
  std::vector<LinearConstraint> linear;
  std::vector<QuadraticConstraint> quadratic;

  int add_scalar(const std::string& name);
  int add_hermitian(const std::string& name, int n);
  // Zero-pads objective and linear rows after variables were added.
  void finalize();
  double objective_value(const Vec& x) const { return objective.dot(x) + objective_offset; }
  // Largest violation over all constraints (LMI: -lambda_min).
  double max_violation(const Vec& x) const;
};

}  // namespace swipt::conic
