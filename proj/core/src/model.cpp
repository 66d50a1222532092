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

#include "swipt/model.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace swipt::model {

CMat Scenario::rrh_indicator(int l) const {
  const int n = num_tx();
  CMat r = CMat::Zero(n, n);
  for (int a = 0; a < antennas_per_rrh; ++a) r(l * antennas_per_rrh + a, l * antennas_per_rrh + a) = 1.0;
  return r;
}

std::vector<double> Scenario::backhaul_rates() const {
  std::vector<double> r;
  r.reserve(gamma_req.size());
  for (double g : gamma_req) r.push_back(secrecy_rate(g, gamma_tol));
  return r;
}

void Scenario::validate() const {
  auto fail = [](const std::string& m) { throw StructuralError("scenario: " + m); };
  if (num_rrh < 1 || num_ir < 1 || num_er < 0 || antennas_per_rrh < 1) fail("non-positive dimensions");
  const int n = num_tx();
  const auto L = static_cast<size_t>(num_rrh), K = static_cast<size_t>(num_ir), M = static_cast<size_t>(num_er);
  if (h.size() != K || gamma_req.size() != K) fail("IR vectors must have K entries");
  for (const auto& v : h)
    if (v.size() != n) fail("IR channel length must be L * Nt");
  if (g_hat.size() != M || xi.size() != M || eps.size() != M || p_min_er.size() != M)
    fail("ER vectors must have M entries");
  for (size_t m = 0; m < M; ++m) {
    if (g_hat[m].size() != n) fail("ER channel length must be L * Nt");
    if (xi[m].rows() != n || xi[m].cols() != n || !is_positive_definite(xi[m])) fail("Xi must be N x N and PD");
    if (eps[m] < 0.0) fail("negative uncertainty radius");
  }
  if (!gamma_tol_er.empty() && gamma_tol_er.size() != M) fail("per-ER gamma_tol must have M entries");
  for (size_t k = 0; k < K; ++k)
    for (size_t m = 0; m < M; ++m)
      if (!(gamma_req[k] > tol_for_er(static_cast<int>(m)))) fail("gamma_req must exceed gamma_tol");
  if (backhaul_max.size() != L || p_tx_max.size() != L || p_c_rrh.size() != L) fail("per-RRH vectors must have L entries");
  if (e_max.size() != num_rrh + 1) fail("e_max must have L + 1 entries");
  if (grid_loss.rows() != num_rrh + 1 || grid_loss.cols() != num_rrh + 1) fail("grid loss must be (L+1) x (L+1)");
  if (!is_positive_definite(grid_loss.cast<cd>())) fail("grid loss matrix must be PD");
  if (!(sigma_ir_sq > 0.0) || !(sigma_s_sq > 0.0)) fail("noise powers must be positive");
  if (!(pa_inefficiency > 0.0) || !(harvest_efficiency > 0.0 && harvest_efficiency <= 1.0)) fail("bad efficiencies");
  for (double p : p_tx_max)
    if (!(p > 0.0)) fail("p_tx_max must be positive");
  for (int i = 0; i <= num_rrh; ++i)
    if (e_max(i) < 0.0) fail("e_max must be nonnegative");
}

Selection Selection::from_bitstring(int l, int k, const std::string& s) {
  if (static_cast<int>(s.size()) != l * k) throw StructuralError("selection bitstring has wrong length");
  Selection out(l, k);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw StructuralError("selection bitstring must be 0/1");
    out.bits[i] = s[i] - '0';
  }
  return out;
}

int Selection::count() const {
  int c = 0;
  for (int b : bits) c += b;
  return c;
}

std::string Selection::bitstring() const {
  std::string s;
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

double Policy::objective() const {
  double t = v.trace().real();
  for (const auto& x : w) t += x.trace().real();
  return t;
}

double sinr_ir(const Policy& p, const Scenario& sc, int k) {
  const CVec& h = sc.h[static_cast<size_t>(k)];
  const double sig = (h.adjoint() * p.w[static_cast<size_t>(k)] * h)(0).real();
  double interf = (h.adjoint() * p.v * h)(0).real();
  for (int j = 0; j < sc.num_ir; ++j)
    if (j != k) interf += (h.adjoint() * p.w[static_cast<size_t>(j)] * h)(0).real();
  return sig / (interf + sc.sigma_ir_sq);
}

double secrecy_rate(double gamma_req, double gamma_tol) {
  return std::max(0.0, std::log2(1.0 + gamma_req) - std::log2(1.0 + gamma_tol));
}

double harvested_power(const Policy& p, const CVec& g, double mu) {
  CMat total = p.v;
  for (const auto& x : p.w) total += x;
  return mu * (g.adjoint() * total * g)(0).real();
}

double er_sinr(const Policy& p, const CVec& g, int k, double sigma_s_sq) {
  const double sig = (g.adjoint() * p.w[static_cast<size_t>(k)] * g)(0).real();
  const double an = (g.adjoint() * p.v * g)(0).real();
  return sig / (an + sigma_s_sq);
}

double grid_loss(const Vec& e_s, const Mat& b) {
  if (b.rows() != e_s.size() || b.cols() != e_s.size()) throw StructuralError("grid_loss: dimension mismatch");
  Eigen::LLT<Mat> llt(0.5 * (b + b.transpose()));
  if (llt.info() != Eigen::Success || (b - b.transpose()).norm() > 1e-9 * (1.0 + b.norm()))
    throw StructuralError("grid_loss: B must be symmetric positive definite");
  return e_s.dot(b * e_s);
}

double backhaul_consumption(const Policy& p, const Scenario& sc, int l, double zero_tol) {
  const auto rates = sc.backhaul_rates();
  double c = 0.0;
  const int nt = sc.antennas_per_rrh;
  for (int k = 0; k < sc.num_ir; ++k) {
    const double e = p.w[static_cast<size_t>(k)].diagonal().segment(l * nt, nt).real().sum();
    if (e > zero_tol) c += rates[static_cast<size_t>(k)];
  }
  return c;
}

double power_consumption(const Policy& p, const Scenario& sc) {
  double total = sc.p_c_cp;
  const int nt = sc.antennas_per_rrh;
  for (int l = 0; l < sc.num_rrh; ++l) {
    double tx = p.v.diagonal().segment(l * nt, nt).real().sum();
    for (const auto& x : p.w) tx += x.diagonal().segment(l * nt, nt).real().sum();
    total += sc.p_c_rrh[static_cast<size_t>(l)] + sc.pa_inefficiency * tx;
  }
  return total;
}

bool ConstraintReport::satisfied() const {
  for (const auto& e : entries)
    if (e.slack < -tol * e.scale) return false;
  return true;
}

const ConstraintSlack* ConstraintReport::worst() const {
  const ConstraintSlack* w = nullptr;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) {
    const double r = e.slack / e.scale;
    if (r < best) {
      best = r;
      w = &e;
    }
  }
  return w;
}

std::string ConstraintReport::summary() const {
  std::ostringstream os;
  const auto* w = worst();
  os << (satisfied() ? "ok" : "violated");
  if (w) os << " (worst " << w->name << " slack " << w->slack << ")";
  return os.str();
}

ConstraintReport check_deterministic(const Policy& p, const Scenario& sc, double tol, EnergyAccounting energy) {
  ConstraintReport rep;
  rep.tol = tol;
  const int K = sc.num_ir, L = sc.num_rrh, nt = sc.antennas_per_rrh;
  auto add = [&rep](std::string name, double slack, double scale) {
    rep.entries.push_back({std::move(name), slack, std::max(scale, 1e-300)});
  };
  auto idx = [](const char* base, int i) { return std::string(base) + "[" + std::to_string(i) + "]"; };
  auto idx2 = [](const char* base, int i, int j) {
    return std::string(base) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  };
  if (static_cast<int>(p.w.size()) != K) throw StructuralError("policy: expected K beamforming matrices");

  for (int k = 0; k < K; ++k) {
    const CVec& h = sc.h[static_cast<size_t>(k)];
    const double sig = (h.adjoint() * p.w[static_cast<size_t>(k)] * h)(0).real();
    double interf = (h.adjoint() * p.v * h)(0).real() + sc.sigma_ir_sq;
    for (int j = 0; j < K; ++j)
      if (j != k) interf += (h.adjoint() * p.w[static_cast<size_t>(j)] * h)(0).real();
    add(idx("sinr_ir", k), sig / sc.gamma_req[static_cast<size_t>(k)] - interf, interf);
  }
  const auto rates = sc.backhaul_rates();
  for (int l = 0; l < L; ++l) {
    double used = 0.0;
    for (int k = 0; k < K; ++k) used += p.s.at(l, k) * rates[static_cast<size_t>(k)];
    add(idx("backhaul", l), sc.backhaul_max[static_cast<size_t>(l)] - used,
        std::max(1.0, sc.backhaul_max[static_cast<size_t>(l)]));
  }
  if (energy == EnergyAccounting::pooled) {
    const double supply = p.e_s.sum() - grid_loss(p.e_s, sc.grid_loss);
    const double demand = power_consumption(p, sc);
    add("energy_balance", supply - demand, std::max(1.0, demand));
    for (int i = 0; i <= L; ++i) {
      add(idx("energy_cap", i), sc.e_max(i) - p.e_s(i), std::max(1.0, sc.e_max(i)));
      add(idx("energy_nonneg", i), p.e_s(i), std::max(1.0, sc.e_max(i)));
    }
  } else if (energy == EnergyAccounting::per_rrh) {
    for (int l = 0; l < L; ++l) {
      double tx = p.v.diagonal().segment(l * nt, nt).real().sum();
      for (const auto& x : p.w) tx += x.diagonal().segment(l * nt, nt).real().sum();
      const double demand = sc.p_c_rrh[static_cast<size_t>(l)] + sc.pa_inefficiency * tx;
      add(idx("energy_rrh", l), sc.e_max(l) - demand, std::max(1.0, demand));
    }
    add("energy_cp", sc.e_max(L) - sc.p_c_cp, std::max(1.0, sc.p_c_cp));
  }
  for (int l = 0; l < L; ++l) {
    double tx = p.v.diagonal().segment(l * nt, nt).real().sum();
    for (const auto& x : p.w) tx += x.diagonal().segment(l * nt, nt).real().sum();
    const double pm = sc.p_tx_max[static_cast<size_t>(l)];
    add(idx("tx_power", l), pm - tx, pm);
    for (int k = 0; k < K; ++k) {
      const double e = p.w[static_cast<size_t>(k)].diagonal().segment(l * nt, nt).real().sum();
      add(idx2("selection_power", l, k), p.s.at(l, k) * pm - e, pm);
    }
  }
  double wscale = p.v.trace().real();
  for (const auto& x : p.w) wscale = std::max(wscale, x.trace().real());
  wscale = std::max(wscale, 1e-12);
  add("an_psd", min_eigenvalue(p.v), wscale);
  for (int k = 0; k < K; ++k) add(idx("beam_psd", k), min_eigenvalue(p.w[static_cast<size_t>(k)]), wscale);
  return rep;
}

}  // namespace swipt::model
