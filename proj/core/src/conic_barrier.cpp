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

#include "swipt/conic/barrier.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace swipt::conic {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::numerical_failure: return "numerical_failure";
  }
  return "unknown";
}

namespace {

const double kSqrt2 = std::sqrt(2.0);

struct CoordIndex {
  int a, b, kind;  // kind 0: diagonal, 1: real part, 2: imaginary part
};

const std::vector<CoordIndex>& coord_index(int n) {
  static thread_local std::vector<std::vector<CoordIndex>> cache;
  if (static_cast<int>(cache.size()) <= n) cache.resize(static_cast<size_t>(n) + 1);
  auto& c = cache[static_cast<size_t>(n)];
  if (c.empty() && n > 0) {
    for (int a = 0; a < n; ++a) c.push_back({a, a, 0});
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        c.push_back({a, b, 1});
        c.push_back({a, b, 2});
      }
  }
  return c;
}

// Adds coef * Re Tr(E_p T E_q T^H) at (row + p, col + q).
// For q = (a, b) the sandwich is built from O(c, d) = T(c, a) conj(T(d, b)).
void add_sandwich_block(const CMat& t, double coef, Mat& h, int row, int col) {
  const int nu = static_cast<int>(t.rows());
  const int nv = static_cast<int>(t.cols());
  if (nu == 0 || nv == 0) return;
  const auto& pu = coord_index(nu);
  const double s2 = kSqrt2;
  thread_local std::vector<cd> o;
  o.resize(static_cast<size_t>(nu) * nu);
  const cd* tp = t.data();
  auto fill = [&](int a, int b) {
    const cd* ta = tp + static_cast<size_t>(a) * nu;
    const cd* tb = tp + static_cast<size_t>(b) * nu;
    for (int d = 0; d < nu; ++d) {
      const cd cb = std::conj(tb[d]);
      cd* od = o.data() + static_cast<size_t>(d) * nu;
      for (int c = 0; c < nu; ++c) od[c] = ta[c] * cb;
    }
  };
  auto at = [&](int c, int d) { return o[static_cast<size_t>(d) * nu + c]; };
  const Eigen::Index ld = h.rows();
  // Diagonal basis elements: M = t_a t_a^H.
  for (int a = 0; a < nv; ++a) {
    fill(a, a);
    double* out = h.data() + static_cast<Eigen::Index>(col + a) * ld + row;
    for (size_t p = 0; p < pu.size(); ++p) {
      const auto& ci = pu[p];
      const cd m = at(ci.a, ci.b);
      out[p] += coef * (ci.kind == 0 ? m.real() : (ci.kind == 1 ? s2 * m.real() : s2 * m.imag()));
    }
  }
  // Off-diagonal pairs: M_re = (O + O^H) / sqrt2, M_im = i (O - O^H) / sqrt2.
  int q = nv;
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      fill(a, b);
      double* out_re = h.data() + static_cast<Eigen::Index>(col + q) * ld + row;
      double* out_im = out_re + ld;
      for (size_t p = 0; p < pu.size(); ++p) {
        const auto& ci = pu[p];
        const cd x = at(ci.a, ci.b);
        const cd y = std::conj(at(ci.b, ci.a));
        const cd mre = x + y;                     // times 1/sqrt2
        const cd mim = cd(0.0, 1.0) * (x - y);    // times 1/sqrt2
        if (ci.kind == 0) {
          out_re[p] += coef * mre.real() / s2;
          out_im[p] += coef * mim.real() / s2;
        } else if (ci.kind == 1) {
          out_re[p] += coef * mre.real();
          out_im[p] += coef * mim.real();
        } else {
          out_re[p] += coef * mre.imag();
          out_im[p] += coef * mim.imag();
        }
      }
      q += 2;
    }
}

class Barrier {
 public:
  explicit Barrier(const ConicProgram& p) : p_(p) {
    rows_.resize(p.linear.size());
    for (size_t i = 0; i < p.linear.size(); ++i) {
      const Vec& a = p.linear[i].a;
      for (Eigen::Index j = 0; j < a.size(); ++j)
        if (a(j) != 0.0) {
          rows_[i].idx.push_back(static_cast<int>(j));
          rows_[i].val.push_back(a(j));
        }
      rows_[i].rhs = p.linear[i].rhs;
    }
    nu_ = static_cast<double>(p.linear.size() + p.quadratic.size());
    for (const auto& c : p.lmis) nu_ += c.dim();
  }

  double nu() const { return nu_; }

  // Barrier value and optionally derivatives; false outside the domain.
  bool eval(const Vec& x, double& phi, Vec* g, Mat* h, std::vector<CMat>* inverses = nullptr,
            Vec* lin_slack = nullptr, Vec* quad_slack = nullptr) const {
    const int m = p_.num_vars;
    phi = 0.0;
    if (g) g->setZero(m);
    if (h) {
      h->setZero(m, m);
      hl_.setZero(m, m);
    }
    if (inverses) inverses->clear();
    for (const auto& c : p_.lmis) {
      const CMat s = c.evaluate(x);
      const int d = c.dim();
      Eigen::LLT<CMat> llt(s);
      if (llt.info() != Eigen::Success) return false;
      double logdet = 0.0;
      const CMat& l = llt.matrixLLT();
      for (int i = 0; i < d; ++i) {
        const double v = l(i, i).real();
        if (!(v > 0.0)) return false;
        logdet += 2.0 * std::log(v);
      }
      phi -= logdet;
      if (!g && !inverses) continue;
      CMat pinv = hermitian_part(llt.solve(CMat::Identity(d, d)));
      if (inverses) inverses->push_back(pinv);
      if (!g) continue;
      std::vector<CMat> gs;
      gs.reserve(c.scalars.size());
      for (const auto& st : c.scalars) {
        gs.push_back(pinv * st.coeff);
        (*g)(st.var) -= gs.back().trace().real();
      }
      std::vector<CMat> lp;
      lp.reserve(c.matrices.size());
      for (const auto& mt : c.matrices) {
        lp.push_back(mt.lift * pinv);
        if (mt.n == 0) continue;
        const CMat q = lp.back() * mt.lift.adjoint();
        g->segment(mt.offset, mt.n * mt.n) -= mt.scale * hermitian_coords(q);
      }
      if (!h) continue;
      // Half contributions into hl_; symmetrized once at the end.
      for (size_t i = 0; i < c.scalars.size(); ++i)
        for (size_t j = 0; j < c.scalars.size(); ++j)
          hl_(c.scalars[i].var, c.scalars[j].var) += 0.5 * (gs[i] * gs[j]).trace().real();
      for (size_t u = 0; u < c.matrices.size(); ++u) {
        const auto& mu = c.matrices[u];
        if (mu.n == 0) continue;
        for (size_t i = 0; i < c.scalars.size(); ++i) {
          const CMat mm = lp[u] * c.scalars[i].coeff * lp[u].adjoint();
          hl_.block(mu.offset, c.scalars[i].var, mu.n * mu.n, 1) += mu.scale * hermitian_coords(mm);
        }
        for (size_t v = u; v < c.matrices.size(); ++v) {
          const auto& mv = c.matrices[v];
          if (mv.n == 0) continue;
          const CMat t = lp[u] * mv.lift.adjoint();
          const double coef = mu.scale * mv.scale;
          add_sandwich_block(t, u == v ? 0.5 * coef : coef, hl_, mu.offset, mv.offset);
        }
      }
    }
    if (h) {
      *h += hl_ + hl_.transpose();
    }
    if (lin_slack) lin_slack->resize(static_cast<Eigen::Index>(rows_.size()));
    for (size_t i = 0; i < rows_.size(); ++i) {
      const auto& row = rows_[i];
      double r = row.rhs;
      for (size_t j = 0; j < row.idx.size(); ++j) r -= row.val[j] * x(row.idx[j]);
      if (lin_slack) (*lin_slack)(static_cast<Eigen::Index>(i)) = r;
      if (!(r > 0.0)) return false;
      phi -= std::log(r);
      if (!g) continue;
      const double ir = 1.0 / r;
      for (size_t j = 0; j < row.idx.size(); ++j) (*g)(row.idx[j]) += row.val[j] * ir;
      if (!h) continue;
      const double ir2 = ir * ir;
      for (size_t a = 0; a < row.idx.size(); ++a) {
        const double va = row.val[a] * ir2;
        double* col = h->data() + static_cast<Eigen::Index>(row.idx[a]) * h->rows();
        for (size_t b = 0; b < row.idx.size(); ++b) col[row.idx[b]] += va * row.val[b];
      }
    }
    if (quad_slack) quad_slack->resize(static_cast<Eigen::Index>(p_.quadratic.size()));
    for (size_t qi = 0; qi < p_.quadratic.size(); ++qi) {
      const auto& qc = p_.quadratic[qi];
      const double r = qc.rhs - qc.evaluate(x);
      if (quad_slack) (*quad_slack)(static_cast<Eigen::Index>(qi)) = r;
      if (!(r > 0.0)) return false;
      phi -= std::log(r);
      if (!g) continue;
      Vec grad = qc.a;
      Vec xs(qc.vars.size());
      for (size_t i = 0; i < qc.vars.size(); ++i) xs(static_cast<Eigen::Index>(i)) = x(qc.vars[i]);
      const Vec qx = 2.0 * (qc.q * xs);
      for (size_t i = 0; i < qc.vars.size(); ++i) grad(qc.vars[i]) += qx(static_cast<Eigen::Index>(i));
      *g += grad / r;
      if (!h) continue;
      *h += grad * grad.transpose() / (r * r);
      for (size_t i = 0; i < qc.vars.size(); ++i)
        for (size_t j = 0; j < qc.vars.size(); ++j)
          (*h)(qc.vars[i], qc.vars[j]) += 2.0 * qc.q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) / r;
    }
    return std::isfinite(phi);
  }

 private:
  struct SparseRow {
    std::vector<int> idx;
    std::vector<double> val;
    double rhs = 0.0;
  };
  const ConicProgram& p_;
  std::vector<SparseRow> rows_;
  mutable Mat hl_;
  double nu_ = 0.0;
};

struct PathResult {
  bool ok = false;
  bool stopped = false;
  Vec x;
  double t = 0.0;
  int newton = 0;
  std::string message;
};

// Scaled Newton direction: solves H dx = -grad with Jacobi scaling.
bool newton_direction(const Mat& h, const Vec& grad, Vec& dx) {
  const Eigen::Index m = h.rows();
  Vec dscale(m);
  for (Eigen::Index i = 0; i < m; ++i) dscale(i) = h(i, i) > 0.0 ? 1.0 / std::sqrt(h(i, i)) : 1.0;
  Mat hs = dscale.asDiagonal() * h * dscale.asDiagonal();
  const Vec gs = dscale.cwiseProduct(grad);
  {
    Eigen::LLT<Mat> llt(hs);
    if (llt.info() == Eigen::Success) {
      const Vec ys = llt.solve(-gs);
      if (ys.allFinite()) {
        dx = dscale.cwiseProduct(ys);
        return true;
      }
    }
  }
  for (double reg : {0.0, 1e-13, 1e-10, 1e-7}) {
    Mat hr = hs;
    if (reg > 0.0) hr.diagonal().array() += reg;
    Eigen::LDLT<Mat> ldlt(hr);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) continue;
    const Vec ys = ldlt.solve(-gs);
    if (!ys.allFinite()) continue;
    dx = dscale.cwiseProduct(ys);
    return true;
  }
  return false;
}

PathResult follow_path(const ConicProgram& p, const Barrier& bar, Vec x, double t,
                       const SolverOptions& opt, int newton_budget,
                       const std::function<bool(const Vec&, double)>& done,
                       const std::function<bool(const Vec&)>& early = nullptr) {
  PathResult res;
  const Vec& c = p.objective;
  Vec g, dx;
  Mat h;
  const int m = p.num_vars;
  if (m == 0) {
    res.ok = true;
    res.x = x;
    res.t = t;
    res.stopped = true;
    return res;
  }
  for (int outer = 0; outer < 200; ++outer) {
    // Centering.
    bool centered = false;
    for (int it = 0; it < 200; ++it) {
      if (res.newton >= newton_budget) {
        res.message = "newton budget exhausted";
        res.x = x;
        res.t = t;
        return res;
      }
      double phi = 0.0;
      const bool in_domain = bar.eval(x, phi, &g, &h);
      if (!in_domain) {
        res.message = "iterate left the domain";
        res.x = x;
        res.t = t;
        return res;
      }
      const Vec grad = t * c + g;
      const bool dir_ok = newton_direction(h, grad, dx);
      if (!dir_ok) {
        res.message = "singular newton system";
        res.x = x;
        res.t = t;
        return res;
      }
      ++res.newton;
      const double lam2 = -grad.dot(dx);
      if (!(lam2 >= 0.0) && std::abs(lam2) > 1e-9) {
        res.message = "non-descent newton direction";
        res.x = x;
        res.t = t;
        return res;
      }
      // Past a few steps the decrement sits on a roundoff floor at large t.
      if (lam2 / 2.0 <= opt.newton_tol || (it >= 8 && lam2 / 2.0 <= 1e-7)) {
        centered = true;
        break;
      }
      const double lam = std::sqrt(std::max(lam2, 0.0));
      double step = lam < 0.5 ? 1.0 : 1.0 / (1.0 + lam);
      double f0 = t * c.dot(x) + phi;
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls) {
        const Vec xn = x + step * dx;
        double phin = 0.0;
        const bool ok_ls = bar.eval(xn, phin, nullptr, nullptr);
        if (ok_ls) {
          const double fn = t * c.dot(xn) + phin;
          // Within the quadratic region function values lose precision; a
          // feasible step is enough there.
          if (lam < 0.5 || fn <= f0 - 0.25 * step * lam2 + 1e-12 * std::abs(f0)) {
            x = xn;
            moved = true;
            break;
          }
        }
        step *= 0.5;
      }
      if (moved && early && early(x)) {
        res.ok = true;
        res.stopped = true;
        res.x = x;
        res.t = t;
        return res;
      }
      if (!moved) {
        if (lam2 < 1e-6) {
          centered = true;
          break;
        }
        res.message = "line search failed";
        res.x = x;
        res.t = t;
        return res;
      }
    }
    if (!centered) {
      res.message = "centering did not converge";
      res.x = x;
      res.t = t;
      return res;
    }
    if (done(x, t)) {
      res.ok = true;
      res.stopped = true;
      res.x = x;
      res.t = t;
      return res;
    }
    t *= opt.t_growth;
  }
  res.message = "outer iteration limit";
  res.x = x;
  res.t = t;
  return res;
}

QuadraticConstraint make_ball(int m, int vars, double radius) {
  QuadraticConstraint b;
  b.tag = "safety_ball";
  b.vars.resize(static_cast<size_t>(vars));
  for (int i = 0; i < vars; ++i) b.vars[static_cast<size_t>(i)] = i;
  b.q = Mat::Identity(vars, vars);
  b.a = Vec::Zero(m);
  b.rhs = radius * radius;
  return b;
}

}  // namespace

SolverResult solve(const ConicProgram& program, const SolverOptions& opt, const Vec* start) {
  SolverResult out;
  const int m = program.num_vars;
  if (program.objective.size() != m) throw StructuralError("solve: objective size mismatch");
  for (const auto& r : program.linear)
    if (r.a.size() != m) throw StructuralError("solve: linear row size mismatch in " + r.tag);
  Vec x0 = start ? *start : Vec::Zero(m);
  if (x0.size() != m) throw StructuralError("solve: start size mismatch");

  // Phase II program with the safety ball appended.
  ConicProgram p2 = program;
  p2.quadratic.push_back(make_ball(m, m, opt.ball_radius));
  const Barrier bar2(p2);

  Vec x = x0;
  const double viol = p2.max_violation(x0);
  out.phase1_value = viol;
  if (!(viol < 0.0)) {
    // Phase I: minimize s subject to every constraint relaxed by s.
    ConicProgram p1;
    p1.num_vars = m + 1;
    p1.objective = Vec::Zero(m + 1);
    p1.objective(m) = 1.0;
    for (const auto& c : program.lmis) {
      LmiConstraint c1 = c;
      c1.scalars.push_back({m, CMat::Identity(c.dim(), c.dim())});
      p1.lmis.push_back(std::move(c1));
    }
    for (const auto& r : program.linear) {
      LinearConstraint r1{r.tag, Vec::Zero(m + 1), r.rhs};
      r1.a.head(m) = r.a;
      r1.a(m) = -1.0;
      p1.linear.push_back(std::move(r1));
    }
    for (const auto& q : program.quadratic) {
      QuadraticConstraint q1 = q;
      q1.a = Vec::Zero(m + 1);
      q1.a.head(m) = q.a;
      q1.a(m) = -1.0;
      p1.quadratic.push_back(std::move(q1));
    }
    p1.quadratic.push_back(make_ball(m + 1, m, opt.ball_radius));
    const Barrier bar1(p1);
    Vec z(m + 1);
    z.head(m) = x0;
    z(m) = std::max(viol, 0.0) * 1.1 + 1.0;
    double best = z(m);
    bool infeasible = false;
    auto done = [&](const Vec& zz, double t) {
      best = std::min(best, zz(m));
      if (zz(m) < 0.0) return true;
      const double gap = bar1.nu() / t;
      if (zz(m) - gap > 0.0 || gap < 1e-11) {
        infeasible = true;
        return true;
      }
      return false;
    };
    auto early = [&](const Vec& zz) {
      best = std::min(best, zz(m));
      return zz(m) < 0.0;
    };
    PathResult ph1 = follow_path(p1, bar1, z, bar1.nu() / z(m), opt, opt.max_newton, done, early);
    out.newton_iterations += ph1.newton;
    out.phase1_value = best;
    if (!ph1.ok) {
      // A phase I that stalls with a clearly positive slack is still infeasible.
      if (ph1.x.size() == m + 1 && ph1.x(m) > 1e-6) {
        out.status = SolveStatus::infeasible;
        out.message = "phase I stalled with positive slack: " + ph1.message;
      } else {
        out.status = SolveStatus::numerical_failure;
        out.message = "phase I: " + ph1.message;
      }
      out.x = ph1.x.size() == m + 1 ? Vec(ph1.x.head(m)) : x0;
      return out;
    }
    if (infeasible) {
      out.status = SolveStatus::infeasible;
      out.message = "no strictly feasible point";
      out.x = ph1.x.head(m);
      return out;
    }
    x = ph1.x.head(m);
  }

  // Phase II.
  const double obj0 = program.objective.dot(x);
  const double t0 = bar2.nu() / std::max(std::abs(obj0), 1e-8 * (1.0 + program.objective.norm()));
  double gap = 0.0;
  auto done = [&](const Vec& xx, double t) {
    gap = bar2.nu() / t;
    return gap <= opt.abs_gap + opt.rel_gap * std::abs(program.objective_value(xx));
  };
  PathResult ph2 = follow_path(p2, bar2, x, t0, opt, opt.max_newton, done);
  out.newton_iterations += ph2.newton;
  out.x = ph2.x;
  out.objective = program.objective_value(ph2.x);
  out.gap = bar2.nu() / ph2.t;
  if (!ph2.ok) {
    // Accept a stalled path when it is already close to the target accuracy.
    const double reached = bar2.nu() / ph2.t;
    if (reached <= 1e3 * (opt.abs_gap + opt.rel_gap * std::abs(out.objective))) {
      out.message = "accepted at reduced accuracy: " + ph2.message;
    } else {
      out.status = SolveStatus::numerical_failure;
      out.message = "phase II: " + ph2.message;
      return out;
    }
  }
  double phi = 0.0;
  std::vector<CMat> inv;
  Vec ls, qs;
  if (!bar2.eval(ph2.x, phi, nullptr, nullptr, &inv, &ls, &qs)) {
    out.status = SolveStatus::numerical_failure;
    out.message = "final iterate infeasible";
    return out;
  }
  const double t = ph2.t;
  for (auto& z : inv) out.lmi_duals.push_back(z / t);
  out.linear_duals = ls.size() ? Vec(ls.cwiseInverse() / t) : Vec();
  out.quadratic_duals = Vec(static_cast<Eigen::Index>(program.quadratic.size()));
  for (Eigen::Index i = 0; i < out.quadratic_duals.size(); ++i) out.quadratic_duals(i) = 1.0 / (t * qs(i));
  out.status = SolveStatus::optimal;
  if (out.message.empty()) out.message = "converged";
  return out;
}

}  // namespace swipt::conic
