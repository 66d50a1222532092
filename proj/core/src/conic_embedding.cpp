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

#include "swipt/conic/embedding.hpp"

#include <iomanip>
#include <sstream>

namespace swipt::conic {

Mat real_embed(const CMat& a) {
  const Eigen::Index n = a.rows();
  Mat r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = a.real();
  r.topRightCorner(n, n) = -a.imag();
  r.bottomLeftCorner(n, n) = a.imag();
  r.bottomRightCorner(n, n) = a.real();
  return r;
}

CMat real_unembed(const Mat& r) {
  if (r.rows() != r.cols() || r.rows() % 2 != 0) throw StructuralError("real_unembed: expected 2n x 2n");
  const Eigen::Index n = r.rows() / 2;
  CMat a(n, n);
  a.real() = 0.5 * (r.topLeftCorner(n, n) + r.bottomRightCorner(n, n));
  a.imag() = 0.5 * (r.bottomLeftCorner(n, n) - r.topRightCorner(n, n));
  return a;
}

CMat dual_from_real(const Mat& z) {
  if (z.rows() != z.cols() || z.rows() % 2 != 0) throw StructuralError("dual_from_real: expected 2n x 2n");
  const Eigen::Index n = z.rows() / 2;
  const Mat p = z.topLeftCorner(n, n), q = z.topRightCorner(n, n), r = z.bottomRightCorner(n, n);
  CMat d(n, n);
  d.real() = 0.5 * (p + r);
  d.imag() = 0.5 * (q.transpose() - q);
  return d;
}

namespace {

void triplets(std::ostringstream& os, const Mat& m) {
  int nnz = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      if (m(i, j) != 0.0) ++nnz;
  os << nnz << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      if (m(i, j) != 0.0) os << i << ' ' << j << ' ' << m(i, j) << '\n';
}

}  // namespace

std::string dump_sparse(const ConicProgram& p) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "vars " << p.num_vars << '\n';
  for (const auto& g : p.groups) os << "group " << g.name << ' ' << g.offset << ' ' << g.size << ' ' << g.hermitian_n << '\n';
  os << "objective_offset " << p.objective_offset << '\n';
  int nnz = 0;
  for (Eigen::Index i = 0; i < p.objective.size(); ++i)
    if (p.objective(i) != 0.0) ++nnz;
  os << "objective " << nnz << '\n';
  for (Eigen::Index i = 0; i < p.objective.size(); ++i)
    if (p.objective(i) != 0.0) os << i << ' ' << p.objective(i) << '\n';
  for (const auto& c : p.lmis) {
    os << "lmi " << c.tag << ' ' << 2 * c.dim() << '\n';
    os << "constant ";
    triplets(os, real_embed(c.constant));
    for (const auto& s : c.scalars) {
      os << "coef " << s.var << ' ';
      triplets(os, real_embed(s.coeff));
    }
    for (const auto& m : c.matrices)
      for (int q = 0; q < m.n * m.n; ++q) {
        os << "coef " << m.offset + q << ' ';
        triplets(os, real_embed(m.scale * (m.lift.adjoint() * hermitian_basis(m.n, q) * m.lift)));
      }
  }
  for (const auto& r : p.linear) {
    int z = 0;
    for (Eigen::Index i = 0; i < r.a.size(); ++i)
      if (r.a(i) != 0.0) ++z;
    os << "linear " << r.tag << ' ' << r.rhs << ' ' << z << '\n';
    for (Eigen::Index i = 0; i < r.a.size(); ++i)
      if (r.a(i) != 0.0) os << i << ' ' << r.a(i) << '\n';
  }
  for (const auto& q : p.quadratic) {
    os << "quadratic " << q.tag << ' ' << q.rhs << ' ' << q.vars.size() << '\n';
    for (size_t i = 0; i < q.vars.size(); ++i)
      for (size_t j = 0; j < q.vars.size(); ++j)
        os << q.vars[i] << ' ' << q.vars[j] << ' ' << q.q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) << '\n';
    int z = 0;
    for (Eigen::Index i = 0; i < q.a.size(); ++i)
      if (q.a(i) != 0.0) ++z;
    os << "linear_part " << z << '\n';
    for (Eigen::Index i = 0; i < q.a.size(); ++i)
      if (q.a(i) != 0.0) os << i << ' ' << q.a(i) << '\n';
  }
  return os.str();
}

}  // namespace swipt::conic
