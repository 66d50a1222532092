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

#include "swipt/conic/primal.hpp"

#include <limits>

namespace swipt::conic {

namespace {

CMat selector(const std::vector<int>& idx, int n) {
  CMat p = CMat::Zero(static_cast<Eigen::Index>(idx.size()), n);
  for (size_t i = 0; i < idx.size(); ++i) p(static_cast<Eigen::Index>(i), idx[i]) = 1.0;
  return p;
}

std::string tag2(const char* base, int a, int b) {
  return std::string(base) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}
std::string tag1(const char* base, int a) { return std::string(base) + "[" + std::to_string(a) + "]"; }

class Builder {
 public:
  Builder(const model::Scenario& sc, ProgramKind kind, const BuildOptions& opt) : sc_(sc), opt_(opt) {
    sc.validate();
    bp_.kind = kind;
    auto& ly = bp_.layout;
    ly.n = sc.num_tx();
    ly.K = sc.num_ir;
    ly.L = sc.num_rrh;
    ly.M = sc.num_er;
    ly.nt = sc.antennas_per_rrh;
  }

  BuiltProgram build(const model::Selection* s, const Mat* anchor, double phi) {
    auto& ly = bp_.layout;
    auto& pr = bp_.program;
    const int n = ly.n, K = ly.K, L = ly.L, M = ly.M, nt = ly.nt;
    if (s) {
      if (s->num_rrh != L || s->num_ir != K) throw StructuralError("selection dimensions do not match scenario");
      bp_.s = *s;
    } else {
      bp_.s = model::Selection(L, K, 0);
    }
    if (anchor && (anchor->rows() != L || anchor->cols() != K)) throw StructuralError("anchor must be L x K");

    // Active antennas.
    ly.active.assign(static_cast<size_t>(K), {});
    for (int k = 0; k < K; ++k)
      for (int l = 0; l < L; ++l)
        if (bp_.kind != ProgramKind::primal || s->at(l, k))
          for (int a = 0; a < nt; ++a) ly.active[static_cast<size_t>(k)].push_back(l * nt + a);
    for (int k = 0; k < K; ++k) sel_.push_back(selector(ly.active[static_cast<size_t>(k)], n));

    // Variables.
    for (int k = 0; k < K; ++k) {
      const int nk = static_cast<int>(ly.active[static_cast<size_t>(k)].size());
      ly.w_offset.push_back(nk > 0 ? pr.add_hermitian(tag1("W", k), nk) : -1);
    }
    ly.v_offset = pr.add_hermitian("V", n);
    ly.e_var.assign(static_cast<size_t>(L + 1), -1);
    if (opt_.energy == EnergyMode::pooled)
      for (int i = 0; i <= L; ++i)
        if (sc_.e_max(i) > 1e-12) ly.e_var[static_cast<size_t>(i)] = pr.add_scalar(tag1("e", i));
    ly.delta_var.assign(static_cast<size_t>(M), std::vector<int>(static_cast<size_t>(K), -1));
    ly.nu_var.assign(static_cast<size_t>(M), -1);
    for (int m = 0; m < M; ++m) {
      if (sc_.eps[static_cast<size_t>(m)] <= 0.0) continue;
      for (int k = 0; k < K; ++k) ly.delta_var[static_cast<size_t>(m)][static_cast<size_t>(k)] = pr.add_scalar(tag2("delta", m, k));
      ly.nu_var[static_cast<size_t>(m)] = pr.add_scalar(tag1("nu", m));
    }
    if (bp_.kind == ProgramKind::l1_feasibility) {
      ly.alpha_var.assign(static_cast<size_t>(L), std::vector<int>(static_cast<size_t>(K), -1));
      for (int l = 0; l < L; ++l)
        for (int k = 0; k < K; ++k) ly.alpha_var[static_cast<size_t>(l)][static_cast<size_t>(k)] = pr.add_scalar(tag2("alpha", l, k));
    }
    if (bp_.kind == ProgramKind::sca_step) {
      ly.s_var.assign(static_cast<size_t>(L), std::vector<int>(static_cast<size_t>(K), -1));
      for (int l = 0; l < L; ++l)
        for (int k = 0; k < K; ++k) ly.s_var[static_cast<size_t>(l)][static_cast<size_t>(k)] = pr.add_scalar(tag2("s", l, k));
    }
    const int nv = pr.num_vars;

    // Objective.
    pr.objective = Vec::Zero(nv);
    if (bp_.kind != ProgramKind::l1_feasibility) {
      add_herm(pr.objective, -1, CMat::Identity(n, n), 1.0, true);
      for (int k = 0; k < K; ++k) add_herm(pr.objective, k, CMat::Identity(n, n), 1.0, false);
    } else {
      for (int l = 0; l < L; ++l)
        for (int k = 0; k < K; ++k) pr.objective(ly.alpha_var[static_cast<size_t>(l)][static_cast<size_t>(k)]) = 1.0;
    }
    if (bp_.kind == ProgramKind::sca_step) {
      for (int l = 0; l < L; ++l)
        for (int k = 0; k < K; ++k) {
          const double a = (*anchor)(l, k);
          pr.objective(ly.s_var[static_cast<size_t>(l)][static_cast<size_t>(k)]) = phi * (1.0 - 2.0 * a);
          pr.objective_offset += phi * a * a;
        }
    }

    // Legitimate SINR.
    ly.c1_scale = sc_.sigma_ir_sq;
    for (int k = 0; k < K; ++k) {
      const CVec& h = sc_.h[static_cast<size_t>(k)];
      const CMat hh = h * h.adjoint();
      Vec a = Vec::Zero(nv);
      for (int j = 0; j < K; ++j)
        add_herm(a, j, hh, j == k ? -1.0 / sc_.gamma_req[static_cast<size_t>(k)] : 1.0, false);
      add_herm(a, -1, hh, 1.0, true);
      ly.c1_row.push_back(add_row(tag1("sinr", k), a / ly.c1_scale, -1.0));
    }

    // Robust eavesdropping and harvesting.
    ly.c2.assign(static_cast<size_t>(M), std::vector<RobustRef>(static_cast<size_t>(K)));
    ly.c7.assign(static_cast<size_t>(M), RobustRef{});
    for (int m = 0; m < M; ++m) {
      const auto mi = static_cast<size_t>(m);
      const CVec& g = sc_.g_hat[mi];
      const double eps = sc_.eps[mi];
      const double gn = g.norm();
      const double gt = sc_.tol_for_er(m);
      const double pmin = sc_.p_min_er[mi] / sc_.harvest_efficiency;
      if (eps > 0.0) {
        CMat ud(n, n + 1);
        ud.leftCols(n) = CMat::Identity(n, n);
        ud.col(n) = g / gn;
        CMat mult = CMat::Zero(n + 1, n + 1);
        mult.topLeftCorner(n, n) = sc_.xi[mi];
        mult(n, n) = -eps * eps / (gn * gn);
        for (int k = 0; k < K; ++k) {
          LmiConstraint c;
          c.tag = tag2("eavesdrop", m, k);
          c.constant = CMat::Zero(n + 1, n + 1);
          c.constant(n, n) = sc_.sigma_s_sq / (gn * gn);
          c.scalars.push_back({ly.delta_var[mi][static_cast<size_t>(k)], mult});
          c.matrices.push_back({ly.v_offset, n, 1.0, ud});
          if (ly.w_offset[static_cast<size_t>(k)] >= 0)
            c.matrices.push_back({ly.w_offset[static_cast<size_t>(k)], wdim(k), -1.0 / gt, sel_[static_cast<size_t>(k)] * ud});
          ly.c2[mi][static_cast<size_t>(k)] = {true, add_lmi(std::move(c)), gn, 1.0};
        }
        LmiConstraint c;
        c.tag = tag1("harvest", m);
        c.constant = CMat::Zero(n + 1, n + 1);
        c.constant(n, n) = -pmin / (gn * gn);
        c.scalars.push_back({ly.nu_var[mi], mult});
        c.matrices.push_back({ly.v_offset, n, 1.0, ud});
        for (int k = 0; k < K; ++k)
          if (ly.w_offset[static_cast<size_t>(k)] >= 0)
            c.matrices.push_back({ly.w_offset[static_cast<size_t>(k)], wdim(k), 1.0, sel_[static_cast<size_t>(k)] * ud});
        ly.c7[mi] = {true, add_lmi(std::move(c)), gn, 1.0};
      } else {
        const CMat gg = g * g.adjoint();
        for (int k = 0; k < K; ++k) {
          Vec a = Vec::Zero(nv);
          add_herm(a, k, gg, 1.0 / gt, false);
          add_herm(a, -1, gg, -1.0, true);
          const double sc2 = sc_.sigma_s_sq;
          ly.c2[mi][static_cast<size_t>(k)] = {false, add_row(tag2("eavesdrop", m, k), a / sc2, 1.0), gn, sc2};
        }
        Vec a = Vec::Zero(nv);
        for (int k = 0; k < K; ++k) add_herm(a, k, gg, -1.0, false);
        add_herm(a, -1, gg, -1.0, true);
        const double s7 = pmin > 0.0 ? pmin : 1.0;
        ly.c7[mi] = {false, add_row(tag1("harvest", m), a / s7, -pmin / s7), gn, s7};
      }
    }

    // Energy.
    const double rho = sc_.pa_inefficiency;
    ly.cap_row.assign(static_cast<size_t>(L + 1), -1);
    ly.nonneg_row.assign(static_cast<size_t>(L + 1), -1);
    if (opt_.energy == EnergyMode::pooled) {
      double circuit = sc_.p_c_cp;
      for (double p : sc_.p_c_rrh) circuit += p;
      ly.energy_scale = circuit;
      QuadraticConstraint q;
      q.tag = "energy_balance";
      q.a = Vec::Zero(nv);
      add_herm(q.a, -1, CMat::Identity(n, n), rho, true);
      for (int k = 0; k < K; ++k) add_herm(q.a, k, CMat::Identity(n, n), rho, false);
      std::vector<int> idx;
      for (int i = 0; i <= L; ++i)
        if (ly.e_var[static_cast<size_t>(i)] >= 0) {
          q.vars.push_back(ly.e_var[static_cast<size_t>(i)]);
          idx.push_back(i);
          q.a(ly.e_var[static_cast<size_t>(i)]) = -1.0;
        }
      q.q = Mat(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
      for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
          q.q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sc_.grid_loss(idx[i], idx[j]);
      q.q /= circuit;
      q.a /= circuit;
      q.rhs = -1.0;
      ly.energy_quad = static_cast<int>(pr.quadratic.size());
      pr.quadratic.push_back(std::move(q));
      for (int i = 0; i <= L; ++i) {
        const int v = ly.e_var[static_cast<size_t>(i)];
        if (v < 0) continue;
        const double em = sc_.e_max(i);
        Vec a = Vec::Zero(nv);
        a(v) = 1.0 / em;
        ly.cap_row[static_cast<size_t>(i)] = add_row(tag1("energy_cap", i), a, 1.0);
        a(v) = -1.0 / em;
        ly.nonneg_row[static_cast<size_t>(i)] = add_row(tag1("energy_nonneg", i), a, 0.0);
      }
    } else if (opt_.energy == EnergyMode::per_rrh) {
      for (int l = 0; l < L; ++l) {
        const double em = sc_.e_max(l);
        const double scale = em > 0.0 ? em : 1.0;
        Vec a = Vec::Zero(nv);
        const CMat rl = sc_.rrh_indicator(l);
        add_herm(a, -1, rl, rho, true);
        for (int k = 0; k < K; ++k) add_herm(a, k, rl, rho, false);
        ly.energy_row.push_back(add_row(tag1("energy_rrh", l), a / scale, (em - sc_.p_c_rrh[static_cast<size_t>(l)]) / scale));
        ly.energy_row_scale.push_back(scale);
      }
      // The CP's own budget involves no variable; a shortfall is infeasible outright.
      if (sc_.e_max(L) < sc_.p_c_cp * (1.0 - 1e-12)) {
        ly.energy_row.push_back(add_row("energy_cp", Vec::Zero(nv), (sc_.e_max(L) - sc_.p_c_cp) / sc_.p_c_cp));
        ly.energy_row_scale.push_back(sc_.p_c_cp);
      }
    }

    // Per-RRH transmit power and selection power.
    ly.sel_row.assign(static_cast<size_t>(L), std::vector<int>(static_cast<size_t>(K), -1));
    for (int l = 0; l < L; ++l) {
      const double pm = sc_.p_tx_max[static_cast<size_t>(l)];
      const CMat rl = sc_.rrh_indicator(l);
      Vec a = Vec::Zero(nv);
      add_herm(a, -1, rl, 1.0 / pm, true);
      for (int k = 0; k < K; ++k) add_herm(a, k, rl, 1.0 / pm, false);
      ly.tx_row.push_back(add_row(tag1("tx_power", l), a, 1.0));
      for (int k = 0; k < K; ++k) {
        const auto lk = static_cast<size_t>(l), kk = static_cast<size_t>(k);
        if (bp_.kind == ProgramKind::primal) {
          if (!s->at(l, k)) continue;
          Vec r = Vec::Zero(nv);
          add_herm(r, k, rl, 1.0 / pm, false);
          ly.sel_row[lk][kk] = add_row(tag2("selection_power", l, k), r, 1.0);
        } else if (bp_.kind == ProgramKind::l1_feasibility) {
          Vec r = Vec::Zero(nv);
          add_herm(r, k, rl, 1.0 / pm, false);
          r(ly.alpha_var[lk][kk]) = -1.0 / pm;
          ly.sel_row[lk][kk] = add_row(tag2("selection_power", l, k), r, s->at(l, k));
          Vec z = Vec::Zero(nv);
          z(ly.alpha_var[lk][kk]) = -1.0 / pm;
          add_row(tag2("alpha_nonneg", l, k), z, 0.0);
        } else {
          Vec r = Vec::Zero(nv);
          add_herm(r, k, rl, 1.0 / pm, false);
          r(ly.s_var[lk][kk]) = -1.0;
          ly.sel_row[lk][kk] = add_row(tag2("selection_power", l, k), r, 0.0);
          Vec z = Vec::Zero(nv);
          z(ly.s_var[lk][kk]) = 1.0;
          add_row(tag2("s_upper", l, k), z, 1.0);
          z(ly.s_var[lk][kk]) = -1.0;
          add_row(tag2("s_lower", l, k), z, 0.0);
        }
      }
    }
    if (bp_.kind == ProgramKind::sca_step) {
      const auto rates = sc_.backhaul_rates();
      ly.backhaul_row.assign(static_cast<size_t>(L), -1);
      for (int l = 0; l < L; ++l) {
        const double cap = sc_.backhaul_max[static_cast<size_t>(l)];
        if (!std::isfinite(cap)) continue;
        Vec a = Vec::Zero(nv);
        double tot = 0.0;
        for (int k = 0; k < K; ++k) {
          a(ly.s_var[static_cast<size_t>(l)][static_cast<size_t>(k)]) = rates[static_cast<size_t>(k)];
          tot += rates[static_cast<size_t>(k)];
        }
        if (tot <= 0.0) continue;
        const double scale = cap > 0.0 ? cap : 1.0;
        ly.backhaul_row[static_cast<size_t>(l)] = add_row(tag1("backhaul", l), a / scale, cap / scale);
      }
    }

    // Multiplier signs.
    ly.delta_row.assign(static_cast<size_t>(M), std::vector<int>(static_cast<size_t>(K), -1));
    ly.nu_row.assign(static_cast<size_t>(M), -1);
    for (int m = 0; m < M; ++m) {
      const auto mi = static_cast<size_t>(m);
      if (ly.nu_var[mi] < 0) continue;
      for (int k = 0; k < K; ++k) {
        Vec a = Vec::Zero(nv);
        a(ly.delta_var[mi][static_cast<size_t>(k)]) = -1.0;
        ly.delta_row[mi][static_cast<size_t>(k)] = add_row(tag2("delta_nonneg", m, k), a, 0.0);
      }
      Vec a = Vec::Zero(nv);
      a(ly.nu_var[mi]) = -1.0;
      ly.nu_row[mi] = add_row(tag1("nu_nonneg", m), a, 0.0);
    }

    // Semidefiniteness.
    for (int k = 0; k < K; ++k) {
      const int off = ly.w_offset[static_cast<size_t>(k)];
      if (off < 0) {
        ly.w_psd.push_back(-1);
        continue;
      }
      LmiConstraint c;
      c.tag = tag1("beam_psd", k);
      c.constant = CMat::Zero(wdim(k), wdim(k));
      c.matrices.push_back({off, wdim(k), 1.0, CMat::Identity(wdim(k), wdim(k))});
      ly.w_psd.push_back(add_lmi(std::move(c)));
    }
    {
      LmiConstraint c;
      c.tag = "an_psd";
      c.constant = CMat::Zero(n, n);
      c.matrices.push_back({ly.v_offset, n, 1.0, CMat::Identity(n, n)});
      ly.v_psd = add_lmi(std::move(c));
    }
    pr.finalize();
    return std::move(bp_);
  }

 private:
  int wdim(int k) const { return static_cast<int>(bp_.layout.active[static_cast<size_t>(k)].size()); }

  // Adds coef * coords of the restriction of a full-space matrix to W_k (or V).
  void add_herm(Vec& a, int k, const CMat& full, double coef, bool is_v) {
    const auto& ly = bp_.layout;
    if (is_v) {
      a.segment(ly.v_offset, ly.n * ly.n) += coef * hermitian_coords(full);
      return;
    }
    const int off = ly.w_offset[static_cast<size_t>(k)];
    if (off < 0) return;
    const CMat& p = sel_[static_cast<size_t>(k)];
    const int nk = wdim(k);
    a.segment(off, nk * nk) += coef * hermitian_coords(p * full * p.adjoint());
  }

  int add_row(const std::string& tag, const Vec& a, double rhs) {
    bp_.program.linear.push_back({tag, a, rhs});
    return static_cast<int>(bp_.program.linear.size()) - 1;
  }

  int add_lmi(LmiConstraint c) {
    bp_.program.lmis.push_back(std::move(c));
    return static_cast<int>(bp_.program.lmis.size()) - 1;
  }

  const model::Scenario& sc_;
  BuildOptions opt_;
  BuiltProgram bp_;
  std::vector<CMat> sel_;
};

CMat lift_to_full(const CMat& reduced, const std::vector<int>& idx, int n) {
  CMat full = CMat::Zero(n, n);
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b < idx.size(); ++b)
      full(idx[a], idx[b]) = reduced(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  return full;
}

}  // namespace

BuiltProgram build_primal(const model::Scenario& sc, const model::Selection& s, const BuildOptions& opt) {
  return Builder(sc, ProgramKind::primal, opt).build(&s, nullptr, 0.0);
}

BuiltProgram build_l1_feasibility(const model::Scenario& sc, const model::Selection& s, const BuildOptions& opt) {
  return Builder(sc, ProgramKind::l1_feasibility, opt).build(&s, nullptr, 0.0);
}

BuiltProgram build_sca_step(const model::Scenario& sc, const Mat& anchor, double phi, const BuildOptions& opt) {
  if (phi < 0.0) throw StructuralError("penalty factor must be nonnegative");
  return Builder(sc, ProgramKind::sca_step, opt).build(nullptr, &anchor, phi);
}

PrimalOutcome extract(const BuiltProgram& bp, const model::Scenario& sc, const SolverResult& r) {
  PrimalOutcome out;
  out.raw = r;
  out.status = r.status;
  const auto& ly = bp.layout;
  const int n = ly.n, K = ly.K, L = ly.L, M = ly.M;
  if (r.x.size() != bp.program.num_vars) return out;
  const Vec& x = r.x;
  out.objective = bp.program.objective_value(x);

  auto& pol = out.policy;
  for (int k = 0; k < K; ++k) {
    const int off = ly.w_offset[static_cast<size_t>(k)];
    const auto& idx = ly.active[static_cast<size_t>(k)];
    const int nk = static_cast<int>(idx.size());
    pol.w.push_back(off < 0 ? CMat::Zero(n, n) : lift_to_full(hermitian_from_coords(x.segment(off, nk * nk), nk), idx, n));
  }
  pol.v = hermitian_from_coords(x.segment(ly.v_offset, n * n), n);
  pol.e_s = Vec::Zero(L + 1);
  for (int i = 0; i <= L; ++i)
    if (ly.e_var[static_cast<size_t>(i)] >= 0) pol.e_s(i) = x(ly.e_var[static_cast<size_t>(i)]);
  pol.s = bp.s;
  out.power = pol.objective();
  out.delta.assign(static_cast<size_t>(M), std::vector<double>(static_cast<size_t>(K), 0.0));
  out.nu.assign(static_cast<size_t>(M), 0.0);
  for (int m = 0; m < M; ++m) {
    const auto mi = static_cast<size_t>(m);
    if (ly.nu_var[mi] < 0) continue;
    out.nu[mi] = x(ly.nu_var[mi]);
    for (int k = 0; k < K; ++k) out.delta[mi][static_cast<size_t>(k)] = x(ly.delta_var[mi][static_cast<size_t>(k)]);
  }
  if (bp.kind == ProgramKind::l1_feasibility) {
    out.alpha = Mat::Zero(L, K);
    for (int l = 0; l < L; ++l)
      for (int k = 0; k < K; ++k) out.alpha(l, k) = x(ly.alpha_var[static_cast<size_t>(l)][static_cast<size_t>(k)]);
  }
  if (bp.kind == ProgramKind::sca_step) {
    out.s_continuous = Mat::Zero(L, K);
    pol.s = model::Selection(L, K);
    for (int l = 0; l < L; ++l)
      for (int k = 0; k < K; ++k) {
        out.s_continuous(l, k) = x(ly.s_var[static_cast<size_t>(l)][static_cast<size_t>(k)]);
        pol.s.at(l, k) = out.s_continuous(l, k) >= 0.5 ? 1 : 0;
      }
  }
  if (r.status != SolveStatus::optimal) return out;

  // Duals back in physical units.
  auto& d = out.duals;
  const Vec& y = r.linear_duals;
  d.sinr = Vec(K);
  for (int k = 0; k < K; ++k) d.sinr(k) = y(ly.c1_row[static_cast<size_t>(k)]) / ly.c1_scale;
  d.eavesdrop.assign(static_cast<size_t>(M), std::vector<CMat>(static_cast<size_t>(K)));
  d.harvest.assign(static_cast<size_t>(M), CMat());
  auto robust_dual = [&](const RobustRef& ref) {
    if (ref.is_lmi) {
      CMat z = r.lmi_duals[static_cast<size_t>(ref.index)];
      z.row(n) /= ref.g_norm;
      z.col(n) /= ref.g_norm;
      return z;
    }
    CMat z = CMat::Zero(n + 1, n + 1);
    z(n, n) = y(ref.index) / ref.row_scale;
    return z;
  };
  for (int m = 0; m < M; ++m) {
    for (int k = 0; k < K; ++k)
      d.eavesdrop[static_cast<size_t>(m)][static_cast<size_t>(k)] = robust_dual(ly.c2[static_cast<size_t>(m)][static_cast<size_t>(k)]);
    d.harvest[static_cast<size_t>(m)] = robust_dual(ly.c7[static_cast<size_t>(m)]);
  }
  d.energy_rrh = Vec::Zero(L);
  d.energy_cap = Vec::Zero(L + 1);
  d.energy_nonneg = Vec::Zero(L + 1);
  if (ly.energy_quad >= 0) {
    d.energy = r.quadratic_duals(ly.energy_quad) / ly.energy_scale;
    d.energy_rrh.setConstant(sc.pa_inefficiency * d.energy);
    for (int i = 0; i <= L; ++i) {
      if (ly.cap_row[static_cast<size_t>(i)] < 0) continue;
      d.energy_cap(i) = y(ly.cap_row[static_cast<size_t>(i)]) / sc.e_max(i);
      d.energy_nonneg(i) = y(ly.nonneg_row[static_cast<size_t>(i)]) / sc.e_max(i);
    }
  } else if (!ly.energy_row.empty()) {
    for (int l = 0; l < L; ++l)
      d.energy_rrh(l) = sc.pa_inefficiency * y(ly.energy_row[static_cast<size_t>(l)]) / ly.energy_row_scale[static_cast<size_t>(l)];
  }
  d.tx_power = Vec(L);
  d.selection = Mat::Zero(L, K);
  for (int l = 0; l < L; ++l) {
    const double pm = sc.p_tx_max[static_cast<size_t>(l)];
    d.tx_power(l) = y(ly.tx_row[static_cast<size_t>(l)]) / pm;
    for (int k = 0; k < K; ++k) {
      const int row = ly.sel_row[static_cast<size_t>(l)][static_cast<size_t>(k)];
      if (row >= 0) d.selection(l, k) = y(row) / pm;
    }
  }
  d.delta_nonneg = Mat::Zero(M, K);
  d.nu_nonneg = Vec::Zero(M);
  for (int m = 0; m < M; ++m) {
    if (ly.nu_row[static_cast<size_t>(m)] < 0) continue;
    d.nu_nonneg(m) = y(ly.nu_row[static_cast<size_t>(m)]);
    for (int k = 0; k < K; ++k) d.delta_nonneg(m, k) = y(ly.delta_row[static_cast<size_t>(m)][static_cast<size_t>(k)]);
  }
  for (int k = 0; k < K; ++k) {
    const int li = ly.w_psd[static_cast<size_t>(k)];
    d.beam_psd.push_back(li < 0 ? CMat::Zero(n, n)
                                : lift_to_full(r.lmi_duals[static_cast<size_t>(li)], ly.active[static_cast<size_t>(k)], n));
  }
  d.an_psd = r.lmi_duals[static_cast<size_t>(ly.v_psd)];
  if (!ly.backhaul_row.empty()) {
    d.backhaul = Vec::Zero(L);
    for (int l = 0; l < L; ++l) {
      const int row = ly.backhaul_row[static_cast<size_t>(l)];
      if (row >= 0) d.backhaul(l) = y(row) / sc.backhaul_max[static_cast<size_t>(l)];
    }
  }
  return out;
}

PrimalOutcome solve_program(const BuiltProgram& bp, const model::Scenario& sc, const SolverOptions& opt) {
  return extract(bp, sc, solve(bp.program, opt));
}

PrimalOutcome solve_primal(const model::Scenario& sc, const model::Selection& s, const SolverOptions& opt,
                           const BuildOptions& bopt) {
  return solve_program(build_primal(sc, s, bopt), sc, opt);
}

PrimalOutcome solve_l1(const model::Scenario& sc, const model::Selection& s, const SolverOptions& opt,
                       const BuildOptions& bopt) {
  return solve_program(build_l1_feasibility(sc, s, bopt), sc, opt);
}

CMat stationarity_matrix(const BuiltProgram& bp, const model::Scenario& sc, const DualCertificate& d, int k) {
  const auto& ly = bp.layout;
  const int n = ly.n;
  CMat c = CMat::Identity(n, n);
  CMat u(n, n + 1);
  u.leftCols(n) = CMat::Identity(n, n);
  for (int m = 0; m < ly.M; ++m) {
    const auto mi = static_cast<size_t>(m);
    u.col(n) = sc.g_hat[mi];
    const CMat dm = d.eavesdrop[mi][static_cast<size_t>(k)] / sc.tol_for_er(m) - d.harvest[mi];
    c += u * dm * u.adjoint();
  }
  for (int j = 0; j < ly.K; ++j)
    if (j != k) c += d.sinr(j) * sc.h[static_cast<size_t>(j)] * sc.h[static_cast<size_t>(j)].adjoint();
  for (int l = 0; l < ly.L; ++l)
    c += (d.energy_rrh(l) + d.tx_power(l) + d.selection(l, k)) * sc.rrh_indicator(l);
  const CMat p = selector(ly.active[static_cast<size_t>(k)], n);
  return hermitian_part(p * c * p.adjoint());
}

}  // namespace swipt::conic
