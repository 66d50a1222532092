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

#include "swipt/conic/rank_one.hpp"

#include <Eigen/Eigenvalues>

#include "swipt/robust.hpp"

namespace swipt::conic {

namespace {

CMat selector(const std::vector<int>& idx, int n) {
  CMat p = CMat::Zero(static_cast<Eigen::Index>(idx.size()), n);
  for (size_t i = 0; i < idx.size(); ++i) p(static_cast<Eigen::Index>(i), idx[i]) = 1.0;
  return p;
}

double second_ratio(const CMat& w) {
  if (w.rows() < 2) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(w), Eigen::EigenvaluesOnly);
  const Vec& ev = es.eigenvalues();
  const double top = ev(ev.size() - 1);
  if (top <= 0.0) return 0.0;
  return std::max(0.0, ev(ev.size() - 2)) / top;
}

}  // namespace

RecoveredPolicy recover_rank_one(const BuiltProgram& bp, const model::Scenario& sc, const PrimalOutcome& out,
                                 double rank_tol, double verify_tol) {
  if (out.status != SolveStatus::optimal) throw RecoveryError("rank-one recovery needs an optimal primal solution");
  if (bp.kind != ProgramKind::primal) throw RecoveryError("rank-one recovery runs on a fixed-selection primal");
  const auto& ly = bp.layout;
  const int n = ly.n, K = ly.K;
  RecoveredPolicy rp;
  rp.policy = out.policy;
  auto& pol = rp.policy;
  auto& rep = rp.report;
  const double obj_before = pol.objective();

  for (int k = 0; k < K; ++k) {
    const auto kk = static_cast<size_t>(k);
    const auto& idx = ly.active[kk];
    if (idx.empty()) {
      rep.rank_before.push_back(0);
      rep.ratio_before.push_back(0.0);
      rep.ratio_after.push_back(0.0);
      rep.null_dim.push_back(0);
      rp.beams.push_back(CVec::Zero(n));
      continue;
    }
    const CMat p = selector(idx, n);
    CMat w = hermitian_part(p * pol.w[kk] * p.adjoint());
    rep.rank_before.push_back(numerical_rank(w, rank_tol));
    rep.ratio_before.push_back(second_ratio(w));

    // Stationarity: C_k = Z_k + a_k H_k / gamma_k on the active antennas.
    const CMat c = stationarity_matrix(bp, sc, out.duals, k);
    const CMat hk = p * sc.h[kk] * sc.h[kk].adjoint() * p.adjoint();
    const CMat z = p * out.duals.beam_psd[kk] * p.adjoint();
    const double cn = std::max(c.norm(), 1e-300);
    rep.stationarity_mismatch =
        std::max(rep.stationarity_mismatch, (c - z - out.duals.sinr(k) * hk / sc.gamma_req[kk]).norm() / cn);

    CMat moved = CMat::Zero(w.rows(), w.cols());
    int ndim = 0;
    if (rep.ratio_before.back() > rank_tol) {
      Eigen::SelfAdjointEigenSolver<CMat> es(c);
      const Vec& ev = es.eigenvalues();
      const double top = ev.cwiseAbs().maxCoeff();
      std::vector<Eigen::Index> cols;
      for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev(i) <= rank_tol * top) cols.push_back(i);
      ndim = static_cast<int>(cols.size());
      if (ndim > 0) {
        CMat ups(w.rows(), ndim);
        for (int i = 0; i < ndim; ++i) ups.col(i) = es.eigenvectors().col(cols[static_cast<size_t>(i)]);
        const CMat proj = ups * ups.adjoint();
        // psi_w phi_w phi_w^H summed over an eigenbasis of the null space.
        const CMat part = hermitian_part(proj * w * proj);
        w -= part;
        moved += part;
      }
    }
    rep.null_dim.push_back(ndim);

    // Remaining sub-threshold components.
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(w));
    const Vec& ev = es.eigenvalues();
    const Eigen::Index last = ev.size() - 1;
    const double lam1 = std::max(ev(last), 0.0);
    CVec u = es.eigenvectors().col(last);
    const CMat rest = hermitian_part(w - lam1 * u * u.adjoint());
    moved += rest;
    w = lam1 * u * u.adjoint();
    rep.ratio_after.push_back(ev.size() > 1 && lam1 > 0.0 ? std::max(0.0, ev(last - 1)) / lam1 : 0.0);

    Eigen::Index piv = 0;
    u.cwiseAbs().maxCoeff(&piv);
    if (std::abs(u(piv)) > 0.0) u *= std::conj(u(piv)) / std::abs(u(piv));
    rp.beams.push_back(p.adjoint() * (std::sqrt(lam1) * u));
    pol.w[kk] = p.adjoint() * w * p;
    pol.v += p.adjoint() * moved * p;
    rep.moved_power += moved.trace().real();
  }
  pol.v = hermitian_part(pol.v);
  rep.objective_change = std::abs(pol.objective() - obj_before) / std::max(std::abs(obj_before), 1e-300);

  // The backhaul cap is a property of the selection, not of the beams.
  const auto accounting = ly.energy_quad >= 0      ? model::EnergyAccounting::pooled
                          : !ly.energy_row.empty() ? model::EnergyAccounting::per_rrh
                                                   : model::EnergyAccounting::none;
  auto det = model::check_deterministic(pol, sc, verify_tol, accounting);
  std::erase_if(det.entries, [](const model::ConstraintSlack& e) { return e.name.rfind("backhaul", 0) == 0; });
  if (!det.satisfied()) throw RecoveryError("recovered policy fails verification: " + det.summary());
  const auto rob = robust::verify_policy_robust(pol, sc, verify_tol);
  if (!rob.satisfied()) throw RecoveryError("recovered policy fails robust verification: " + rob.summary());
  return rp;
}

}  // namespace swipt::conic
