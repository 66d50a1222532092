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

#include "swipt/robust.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace swipt::robust {

namespace {

void check_dims(const CMat& a, const CVec& g, const CMat& xi, double eps) {
  const auto n = g.size();
  if (a.rows() != n || a.cols() != n || xi.rows() != n || xi.cols() != n)
    throw StructuralError("robust: dimension mismatch");
  if (eps < 0.0) throw StructuralError("robust: negative radius");
  if (!is_positive_definite(xi)) throw StructuralError("robust: xi must be positive definite");
}

// min over ||z|| <= r of z^H A z + 2 Re(z^H b); returns z.
CVec trust_region_min(const CMat& a, const CVec& b, double r) {
  const Eigen::Index n = b.size();
  if (r == 0.0 || n == 0) return CVec::Zero(n);
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a));
  const Vec& lam = es.eigenvalues();
  const CMat& q = es.eigenvectors();
  const CVec beta = q.adjoint() * b;
  const Vec bmag2 = beta.cwiseAbs2();
  const double scale = std::max({1e-300, lam.cwiseAbs().maxCoeff(), b.norm() / r});
  const double l1 = lam(0);

  auto znorm2 = [&](double mu) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) s += bmag2(i) / ((lam(i) + mu) * (lam(i) + mu));
    return s;
  };
  auto z_of = [&](double mu) {
    CVec c(n);
    for (Eigen::Index i = 0; i < n; ++i) c(i) = -beta(i) / (lam(i) + mu);
    return CVec(q * c);
  };

  // Interior solution.
  if (l1 > 1e-14 * scale && znorm2(0.0) <= r * r) return z_of(0.0);

  const double lo0 = std::max(0.0, -l1);
  // Components along the smallest eigenvalue(s).
  const double deg_tol = 1e-12 * scale;
  double small_mass = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (lam(i) - l1 <= deg_tol) small_mass += bmag2(i);
  if (small_mass <= 1e-24 * std::max(1e-300, b.squaredNorm())) {
    // Possible hard case: evaluate the norm at mu = -l1 ignoring the degenerate part.
    double s = 0.0;
    CVec c = CVec::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (lam(i) - l1 <= deg_tol) continue;
      c(i) = -beta(i) / (lam(i) + lo0);
      s += std::norm(c(i));
    }
    if (s <= r * r) {
      if (lo0 == 0.0 && l1 >= 0.0) {
        // Convex with a flat direction: the unconstrained minimizer fits.
        return q * c;
      }
      c(0) += std::sqrt(std::max(0.0, r * r - s));
      return q * c;
    }
  }

  // Secular equation 1/||z(mu)|| - 1/r = 0 on (lo0, hi].
  double lo = lo0;
  double hi = std::max(lo0, b.norm() / r - l1) + 1e-12 * scale + 1e-300;
  while (znorm2(hi) > r * r) hi = lo0 + 2.0 * (hi - lo0) + scale;
  double mu = hi;
  for (int it = 0; it < 300; ++it) {
    const double s2 = znorm2(mu);
    const double s = std::sqrt(s2);
    const double f = 1.0 / s - 1.0 / r;
    if (std::abs(s - r) <= 1e-14 * r) break;
    if (f < 0.0) lo = mu; else hi = mu;
    double ds2 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) ds2 += -2.0 * bmag2(i) / std::pow(lam(i) + mu, 3);
    const double df = -0.5 * ds2 / (s2 * s);
    double next = mu - f / df;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (hi - lo <= 1e-16 * std::max(1.0, std::abs(hi))) {
      mu = hi;
      break;
    }
    mu = next;
  }
  return z_of(mu);
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, double& arg) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 300 && (b - a) > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  double best = fc >= fd ? c : d;
  double fbest = std::max(fc, fd);
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx > fbest) {
      fbest = fx;
      best = x;
    }
  }
  arg = best;
  return fbest;
}

CMat lmi_matrix(const CMat& a, const CVec& g_hat, const CMat& xi, double mult, double eps, double corner) {
  const Eigen::Index n = g_hat.size();
  CMat u(n, n + 1);
  u.leftCols(n) = CMat::Identity(n, n);
  u.col(n) = g_hat;
  CMat s = u.adjoint() * a * u;
  s.topLeftCorner(n, n) += mult * xi;
  s(n, n) += corner - mult * eps * eps;
  return hermitian_part(s);
}

SProcedureCheck lmi_feasible(const CMat& a, const CVec& g_hat, const CMat& xi, double eps, double corner,
                             double rel_tol) {
  SProcedureCheck out;
  const double bottom = (g_hat.adjoint() * a * g_hat)(0).real() + corner;
  auto lmin = [&](double m) { return min_eigenvalue(lmi_matrix(a, g_hat, xi, m, eps, corner)); };
  const double scale = std::max({1e-300, a.norm() * (1.0 + g_hat.squaredNorm()), std::abs(corner)});
  if (eps == 0.0) {
    // No interior for the uncertainty set: the constraint is the scalar one.
    out.feasible = bottom >= -rel_tol * scale;
    out.multiplier = std::numeric_limits<double>::infinity();
    out.min_eigenvalue = bottom;
    return out;
  }
  const double hi = bottom / (eps * eps);
  if (hi < 0.0) {
    out.feasible = false;
    out.multiplier = 0.0;
    out.min_eigenvalue = lmin(0.0);
    return out;
  }
  double arg = 0.0;
  const double best = golden_max(lmin, 0.0, hi, arg);
  out.multiplier = arg;
  out.min_eigenvalue = best;
  out.feasible = best >= -rel_tol * scale;
  return out;
}

}  // namespace

WorstCase worst_case_quadratic(const CMat& a, const CVec& g_hat, const CMat& xi, double eps, Sense sense) {
  check_dims(a, g_hat, xi, eps);
  const CMat t = inv_sqrtm_pd(xi);
  const double sign = sense == Sense::minimize ? 1.0 : -1.0;
  const CMat ah = hermitian_part(a);
  const CMat at = sign * (t * ah * t);
  const CVec bt = sign * (t * ah * g_hat);
  const CVec z = trust_region_min(at, bt, eps);
  WorstCase wc;
  wc.delta = t * z;
  const CVec x = g_hat + wc.delta;
  wc.value = (x.adjoint() * ah * x)(0).real();
  return wc;
}

LmiBlock build_eavesdrop_lmi(const CMat& w_k, const CMat& v, const CVec& g_hat, const CMat& xi, double eps,
                             double gamma_tol, double sigma_s_sq, double delta, int er, int ir) {
  check_dims(v, g_hat, xi, eps);
  LmiBlock b;
  b.matrix = lmi_matrix(v - w_k / gamma_tol, g_hat, xi, delta, eps, sigma_s_sq);
  b.kind = LmiKind::eavesdrop;
  b.er = er;
  b.ir = ir;
  b.multiplier = delta;
  return b;
}

LmiBlock build_harvest_lmi(const std::vector<CMat>& w, const CMat& v, const CVec& g_hat, const CMat& xi,
                           double eps, double p_min, double mu, double nu, int er) {
  check_dims(v, g_hat, xi, eps);
  CMat total = v;
  for (const auto& x : w) total += x;
  LmiBlock b;
  b.matrix = lmi_matrix(total, g_hat, xi, nu, eps, -p_min / mu);
  b.kind = LmiKind::harvest;
  b.er = er;
  b.multiplier = nu;
  return b;
}

SProcedureCheck eavesdrop_lmi_feasible(const CMat& w_k, const CMat& v, const CVec& g_hat, const CMat& xi,
                                       double eps, double gamma_tol, double sigma_s_sq, double rel_tol) {
  check_dims(v, g_hat, xi, eps);
  return lmi_feasible(v - w_k / gamma_tol, g_hat, xi, eps, sigma_s_sq, rel_tol);
}

SProcedureCheck harvest_lmi_feasible(const std::vector<CMat>& w, const CMat& v, const CVec& g_hat,
                                     const CMat& xi, double eps, double p_min, double mu, double rel_tol) {
  check_dims(v, g_hat, xi, eps);
  CMat total = v;
  for (const auto& x : w) total += x;
  return lmi_feasible(total, g_hat, xi, eps, -p_min / mu, rel_tol);
}

double worst_case_er_sinr(const CMat& w_k, const CMat& v, const CVec& g_hat, const CMat& xi, double eps,
                          double sigma_s_sq) {
  // SINR <= c for every d  <=>  max (g)^H (W - c V) g <= c sigma^2.
  const double top = worst_case_quadratic(w_k, g_hat, xi, eps, Sense::maximize).value;
  if (top <= 0.0) return 0.0;
  double lo = 0.0, hi = top / sigma_s_sq;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double c = 0.5 * (lo + hi);
    const double val = worst_case_quadratic(w_k - c * v, g_hat, xi, eps, Sense::maximize).value;
    if (val <= c * sigma_s_sq) hi = c; else lo = c;
  }
  return hi;
}

double worst_case_harvest(const std::vector<CMat>& w, const CMat& v, const CVec& g_hat, const CMat& xi,
                          double eps, double mu) {
  CMat total = v;
  for (const auto& x : w) total += x;
  return mu * worst_case_quadratic(total, g_hat, xi, eps, Sense::minimize).value;
}

CVec sample_in_ball(const CMat& xi, double eps, const CounterRng& rng, std::uint32_t a, std::uint32_t b) {
  const Eigen::Index n = xi.rows();
  CVec z(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto g = rng.normal2(kPurposeSampling, a, b, static_cast<std::uint32_t>(i));
    z(i) = cd(g[0], g[1]);
  }
  const double u = rng.uniform2(kPurposeSampling, a, b, 0xFFFFFFFFu)[0];
  const double radius = eps * std::pow(u, 1.0 / (2.0 * static_cast<double>(n)));
  z *= radius / z.norm();
  return inv_sqrtm_pd(xi) * z;
}

bool RobustReport::satisfied() const {
  for (const auto& e : entries)
    if (e.slack < -tol * e.scale) return false;
  return true;
}

std::string RobustReport::summary() const {
  std::ostringstream os;
  os << (satisfied() ? "ok" : "violated");
  double worst = std::numeric_limits<double>::infinity();
  const model::ConstraintSlack* w = nullptr;
  for (const auto& e : entries)
    if (e.slack / e.scale < worst) {
      worst = e.slack / e.scale;
      w = &e;
    }
  if (w) os << " (worst " << w->name << " slack " << w->slack << ")";
  return os.str();
}

RobustReport verify_policy_robust(const model::Policy& p, const model::Scenario& sc, double tol) {
  RobustReport rep;
  rep.tol = tol;
  const int M = sc.num_er, K = sc.num_ir;
  rep.worst_er_sinr.assign(static_cast<size_t>(M), std::vector<double>(static_cast<size_t>(K), 0.0));
  rep.worst_harvest.assign(static_cast<size_t>(M), 0.0);
  for (int m = 0; m < M; ++m) {
    const auto mi = static_cast<size_t>(m);
    const CVec& g = sc.g_hat[mi];
    const CMat& xi = sc.xi[mi];
    const double eps = sc.eps[mi];
    const double gt = sc.tol_for_er(m);
    for (int k = 0; k < K; ++k) {
      const CMat& w = p.w[static_cast<size_t>(k)];
      const double top = worst_case_quadratic(w / gt - p.v, g, xi, eps, Sense::maximize).value;
      rep.entries.push_back({"eavesdrop[" + std::to_string(m) + "," + std::to_string(k) + "]",
                             sc.sigma_s_sq - top, sc.sigma_s_sq});
      rep.worst_er_sinr[mi][static_cast<size_t>(k)] = worst_case_er_sinr(w, p.v, g, xi, eps, sc.sigma_s_sq);
    }
    const double hv = worst_case_harvest(p.w, p.v, g, xi, eps, sc.harvest_efficiency);
    rep.worst_harvest[mi] = hv;
    rep.entries.push_back({"harvest[" + std::to_string(m) + "]", hv - sc.p_min_er[mi], sc.p_min_er[mi]});
  }
  return rep;
}

}  // namespace swipt::robust
