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

#include "swipt/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace swipt::lp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-11;

class Tableau {
 public:
  // Columns: structural, slack/surplus, artificial, rhs.
  Tableau(const Mat& a, const Vec& b) : m_(static_cast<int>(a.rows())), n_(static_cast<int>(a.cols())) {
    for (int i = 0; i < m_; ++i)
      if (b(i) < 0.0) art_rows_.push_back(i);
    na_ = static_cast<int>(art_rows_.size());
    cols_ = n_ + m_ + na_;
    t_ = Mat::Zero(m_, cols_ + 1);
    basis_.assign(static_cast<size_t>(m_), -1);
    int next_art = 0;
    for (int i = 0; i < m_; ++i) {
      const double sign = b(i) < 0.0 ? -1.0 : 1.0;
      t_.row(i).head(n_) = sign * a.row(i);
      t_(i, n_ + i) = sign;
      t_(i, cols_) = sign * b(i);
      if (b(i) < 0.0) {
        const int col = n_ + m_ + next_art++;
        t_(i, col) = 1.0;
        basis_[static_cast<size_t>(i)] = col;
      } else {
        basis_[static_cast<size_t>(i)] = n_ + i;
      }
    }
  }

  // Runs the simplex on the cost vector over the allowed columns.
  // Returns false when unbounded.
  bool optimize(const Vec& cost, int allowed_cols) {
    for (;;) {
      // Reduced costs d_j = c_j - c_B^T column_j.
      int enter = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        if (in_basis(j)) continue;
        double d = cost(j);
        for (int i = 0; i < m_; ++i) d -= cost(basis_[static_cast<size_t>(i)]) * t_(i, j);
        if (d < -kCostTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        const double p = t_(i, enter);
        if (p <= kPivotTol) continue;
        const double ratio = t_(i, cols_) / p;
        if (ratio < best - 1e-12 ||
            (std::abs(ratio - best) <= 1e-12 && basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    t_.row(r) /= t_(r, c);
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = t_(i, c);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[static_cast<size_t>(r)] = c;
  }

  // Pivots artificial variables out of the basis after phase one.
  void expel_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[static_cast<size_t>(i)] < n_ + m_) continue;
      for (int j = 0; j < n_ + m_; ++j) {
        if (!in_basis(j) && std::abs(t_(i, j)) > 1e-9) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  bool in_basis(int j) const {
    for (int b : basis_)
      if (b == j) return true;
    return false;
  }

  Vec solution() const {
    Vec x = Vec::Zero(n_);
    for (int i = 0; i < m_; ++i)
      if (basis_[static_cast<size_t>(i)] < n_) x(basis_[static_cast<size_t>(i)]) = t_(i, cols_);
    return x;
  }

  int m_, n_, na_ = 0, cols_ = 0;
  Mat t_;
  std::vector<int> basis_;
  std::vector<int> art_rows_;
};

}  // namespace

LpResult solve(const Mat& a, const Vec& b, const Vec& c) {
  if (a.rows() != b.size() || a.cols() != c.size()) throw StructuralError("lp::solve: dimension mismatch");
  LpResult out;
  Tableau tab(a, b);
  const int n = static_cast<int>(a.cols()), m = static_cast<int>(a.rows());
  if (tab.na_ > 0) {
    Vec c1 = Vec::Zero(tab.cols_);
    c1.tail(tab.na_).setOnes();
    tab.optimize(c1, tab.cols_);
    double infeas = 0.0;
    for (int i = 0; i < m; ++i)
      if (tab.basis_[static_cast<size_t>(i)] >= n + m) infeas += tab.t_(i, tab.cols_);
    const double scale = 1.0 + b.cwiseAbs().maxCoeff();
    if (infeas > 1e-9 * scale) {
      out.status = LpStatus::infeasible;
      return out;
    }
    tab.expel_artificials();
  }
  Vec c2 = Vec::Zero(tab.cols_);
  c2.head(n) = c;
  // Artificials stay out of phase two; a redundant row may keep one at zero.
  if (!tab.optimize(c2, n + m)) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.x = tab.solution();
  out.value = c.dot(out.x);
  return out;
}

}  // namespace swipt::lp
