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

#include "swipt/common.hpp"

#include <Eigen/Eigenvalues>

namespace swipt {

double min_eigenvalue(const CMat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double max_eigenvalue(const CMat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(a.rows() - 1);
}

int numerical_rank(const CMat& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a), Eigen::EigenvaluesOnly);
  const Vec& ev = es.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  if (top == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > rel_tol * top) ++r;
  return r;
}

CMat hermitian_part(const CMat& a) { return 0.5 * (a + a.adjoint()); }

CMat sqrtm_pd(const CMat& a) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a));
  if (es.eigenvalues().minCoeff() <= 0.0) throw StructuralError("sqrtm_pd: matrix is not positive definite");
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

CMat inv_sqrtm_pd(const CMat& a) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a));
  if (es.eigenvalues().minCoeff() <= 0.0) throw StructuralError("inv_sqrtm_pd: matrix is not positive definite");
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
         es.eigenvectors().adjoint();
}

bool is_positive_definite(const CMat& a) {
  if (a.rows() != a.cols()) return false;
  if (a.size() == 0) return true;
  if ((a - a.adjoint()).norm() > 1e-9 * (1.0 + a.norm())) return false;
  Eigen::LLT<CMat> llt(hermitian_part(a));
  return llt.info() == Eigen::Success;
}

}  // namespace swipt
