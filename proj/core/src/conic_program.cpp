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

#include "swipt/conic/program.hpp"

#include <algorithm>

namespace swipt::conic {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

int hermitian_dim(int n) { return n * n; }

Vec hermitian_coords(const CMat& h) {
  const int n = static_cast<int>(h.rows());
  Vec x(n * n);
  for (int a = 0; a < n; ++a) x(a) = h(a, a).real();
  int p = n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const cd v = 0.5 * (h(a, b) + std::conj(h(b, a)));
      x(p++) = kSqrt2 * v.real();
      x(p++) = kSqrt2 * v.imag();
    }
  return x;
}

CMat hermitian_from_coords(const Eigen::Ref<const Vec>& x, int n) {
  CMat h = CMat::Zero(n, n);
  for (int a = 0; a < n; ++a) h(a, a) = x(a);
  int p = n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const cd v(x(p) / kSqrt2, x(p + 1) / kSqrt2);
      h(a, b) = v;
      h(b, a) = std::conj(v);
      p += 2;
    }
  return h;
}

CMat hermitian_basis(int n, int p) {
  Vec e = Vec::Zero(n * n);
  e(p) = 1.0;
  return hermitian_from_coords(e, n);
}

CMat LmiConstraint::evaluate(const Vec& x) const {
  CMat s = constant;
  for (const auto& t : scalars) s += x(t.var) * t.coeff;
  for (const auto& t : matrices) {
    if (t.n == 0) continue;
    const CMat xm = hermitian_from_coords(x.segment(t.offset, t.n * t.n), t.n);
    s += t.scale * (t.lift.adjoint() * xm * t.lift);
  }
  return hermitian_part(s);
}

double QuadraticConstraint::evaluate(const Vec& x) const {
  Vec xs(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) xs(static_cast<Eigen::Index>(i)) = x(vars[i]);
  return xs.dot(q * xs) + a.dot(x);
}

int ConicProgram::add_scalar(const std::string& name) {
  groups.push_back({name, num_vars, 1, 0});
  return num_vars++;
}

int ConicProgram::add_hermitian(const std::string& name, int n) {
  const int off = num_vars;
  groups.push_back({name, off, n * n, n});
  num_vars += n * n;
  return off;
}

void ConicProgram::finalize() {
  auto pad = [this](Vec& v) {
    const Eigen::Index old = v.size();
    if (old == num_vars) return;
    v.conservativeResize(num_vars);
    if (num_vars > old) v.tail(num_vars - old).setZero();
  };
  pad(objective);
  for (auto& r : linear) pad(r.a);
  for (auto& q : quadratic) pad(q.a);
}

double ConicProgram::max_violation(const Vec& x) const {
  double v = -std::numeric_limits<double>::infinity();
  for (const auto& c : lmis) v = std::max(v, -min_eigenvalue(c.evaluate(x)));
  for (const auto& r : linear) v = std::max(v, r.a.dot(x) - r.rhs);
  for (const auto& q : quadratic) v = std::max(v, q.evaluate(x) - q.rhs);
  return v;
}

}  // namespace swipt::conic
