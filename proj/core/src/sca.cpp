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

#include "swipt/sca.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace swipt::sca {

double linearized_penalty(const Mat& s, const Mat& anchor, double phi) {
  if (s.rows() != anchor.rows() || s.cols() != anchor.cols()) throw StructuralError("linearized_penalty: size mismatch");
  return phi * (s.sum() - anchor.squaredNorm() - 2.0 * (anchor.array() * (s - anchor).array()).sum());
}

double exact_penalty(const Mat& s, double phi) { return phi * (s.array() - s.array().square()).sum(); }

double binary_gap(const Mat& s) {
  double g = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) g = std::max(g, std::abs(s(i) - std::round(s(i))));
  return g;
}

conic::PrimalOutcome sca_step(const model::Scenario& sc, const Mat& anchor, double phi,
                              const conic::SolverOptions& solver, const conic::BuildOptions& build) {
  for (Eigen::Index i = 0; i < anchor.size(); ++i)
    if (anchor(i) < 0.0 || anchor(i) > 1.0) throw StructuralError("sca_step: anchor outside [0, 1]");
  return conic::solve_program(conic::build_sca_step(sc, anchor, phi, build), sc, solver);
}

namespace {

// Transmit power of IR k's beam on RRH l.
Mat assignment_power(const model::Policy& p, const model::Scenario& sc) {
  const int nt = sc.antennas_per_rrh;
  Mat pw(sc.num_rrh, sc.num_ir);
  for (int l = 0; l < sc.num_rrh; ++l)
    for (int k = 0; k < sc.num_ir; ++k)
      pw(l, k) = p.w[static_cast<size_t>(k)].diagonal().segment(l * nt, nt).real().sum();
  return pw;
}


}  // namespace

ScaResult run_sca(const model::Scenario& sc, const ScaOptions& opt) {
  sc.validate();
  const int L = sc.num_rrh, K = sc.num_ir;
  ScaResult res;
  res.phi = opt.phi > 0.0 ? opt.phi : 10.0 * *std::max_element(sc.p_tx_max.begin(), sc.p_tx_max.end());
  if (opt.max_iter < 1) throw StructuralError("run_sca: max_iter must be >= 1");

  const conic::PrimalOutcome init = sca_step(sc, Mat::Zero(L, K), 0.0, opt.solver, opt.build);
  if (init.status == conic::SolveStatus::infeasible) throw InfeasibleError("run_sca: continuous relaxation infeasible");
  if (init.status != conic::SolveStatus::optimal)
    throw std::runtime_error("run_sca: relaxation solve failed: " + init.raw.message);

  Mat anchor = init.s_continuous;
  if (opt.anchor == AnchorRule::power_share) {
    const Mat pw = assignment_power(init.policy, sc);
    for (int k = 0; k < K; ++k) {
      const double top = pw.col(k).maxCoeff();
      for (int l = 0; l < L; ++l) anchor(l, k) = top > 0.0 ? std::clamp(pw(l, k) / top, 0.0, 1.0) : 0.0;
    }
  }
  anchor = anchor.cwiseMax(0.0).cwiseMin(1.0);

  conic::PrimalOutcome last = init;
  double prev = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= opt.max_iter; ++it) {
    const conic::PrimalOutcome out = sca_step(sc, anchor, res.phi, opt.solver, opt.build);
    if (out.status != conic::SolveStatus::optimal)
      throw std::runtime_error(std::string("run_sca: penalized step ") + conic::to_string(out.status));
    const Mat s = out.s_continuous.cwiseMax(0.0).cwiseMin(1.0);
    const double pen = out.power + exact_penalty(s, res.phi);
    const double gap = binary_gap(s);
    res.iterations = it;
    res.penalized.push_back(pen);
    res.gaps.push_back(gap);
    if (res.binary_iteration < 0 && gap <= opt.binary_tol) res.binary_iteration = it;
    gbd::TraceRecord rec;
    rec.iter = it;
    rec.s = out.policy.s;
    rec.status = conic::to_string(out.status);
    rec.value = pen;
    rec.ub = pen;
    rec.lb = out.power;
    res.trace.records.push_back(rec);
    last = out;
    anchor = s;
    if (std::abs(prev - pen) <= opt.tol * std::max(1.0, std::abs(pen))) {
      res.converged = true;
      break;
    }
    prev = pen;
  }
  res.s_relaxed = anchor;

  // Round at 0.5, then repair: every IR needs a serving RRH (a beam with
  // zero power cannot meet a positive SINR target), and overloaded backhaul
  // links shed their weakest assignments.
  model::Selection s(L, K, 0);
  for (int l = 0; l < L; ++l)
    for (int k = 0; k < K; ++k) s.at(l, k) = anchor(l, k) >= 0.5 ? 1 : 0;
  const Mat pw = assignment_power(last.policy, sc);
  const auto rates = sc.backhaul_rates();
  auto load = [&](int l) {
    double c = 0.0;
    for (int k = 0; k < K; ++k) c += s.at(l, k) * rates[static_cast<size_t>(k)];
    return c;
  };
  auto served_by = [&](int k) {
    int c = 0;
    for (int l = 0; l < L; ++l) c += s.at(l, k);
    return c;
  };
  for (int k = 0; k < K; ++k) {
    if (served_by(k) > 0) continue;
    int pick = -1;
    bool pick_fits = false;
    for (int l = 0; l < L; ++l) {
      const bool fits = load(l) + rates[static_cast<size_t>(k)] <= sc.backhaul_max[static_cast<size_t>(l)] + 1e-9;
      const bool better = pick < 0 || (fits && !pick_fits) ||
                          (fits == pick_fits && (anchor(l, k) > anchor(pick, k) ||
                                                 (anchor(l, k) == anchor(pick, k) && pw(l, k) > pw(pick, k))));
      if (better) {
        pick = l;
        pick_fits = fits;
      }
    }
    s.at(pick, k) = 1;
    res.repaired = true;
  }
  while (!gbd::backhaul_feasible(s, sc)) {
    int bl = -1, bk = -1;
    bool b_shared = false;
    for (int l = 0; l < L; ++l) {
      if (load(l) <= sc.backhaul_max[static_cast<size_t>(l)] + 1e-9) continue;
      for (int k = 0; k < K; ++k) {
        if (!s.at(l, k)) continue;
        const bool shared = served_by(k) > 1;
        if (bl < 0 || (shared && !b_shared) || (shared == b_shared && pw(l, k) < pw(bl, bk))) {
          bl = l;
          bk = k;
          b_shared = shared;
        }
      }
    }
    if (bl < 0) throw InfeasibleError("run_sca: backhaul cap cannot be met");
    s.at(bl, bk) = 0;
    res.repaired = true;
  }

  const conic::BuiltProgram bp = conic::build_primal(sc, s, opt.build);
  const conic::PrimalOutcome fin = conic::solve_program(bp, sc, opt.solver);
  if (fin.status != conic::SolveStatus::optimal)
    throw InfeasibleError("run_sca: rounded selection " + s.bitstring() + " is " + conic::to_string(fin.status));
  res.s = s;
  res.objective = fin.objective;
  auto rec = conic::recover_rank_one(bp, sc, fin);
  res.policy = std::move(rec.policy);
  res.beams = std::move(rec.beams);
  res.recovery = rec.report;
  res.trace.final_status = (res.converged ? "converged" : "iteration_limit") + std::string(res.repaired ? "_repaired" : "");
  return res;
}

}  // namespace swipt::sca
