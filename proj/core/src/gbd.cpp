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

#include "swipt/gbd.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "swipt/lp.hpp"
#include "swipt/rng.hpp"

namespace swipt::gbd {

const char* to_string(CutKind k) { return k == CutKind::optimality ? "optimality" : "feasibility"; }

const char* to_string(GbdStatus s) {
  switch (s) {
    case GbdStatus::optimal: return "optimal";
    case GbdStatus::iteration_limit: return "iteration_limit";
    case GbdStatus::repeated_pattern: return "repeated_pattern";
  }
  return "unknown";
}

double Cut::evaluate(const model::Selection& s) const {
  if (coeff.rows() != s.num_rrh || coeff.cols() != s.num_ir) throw StructuralError("cut: selection size mismatch");
  double v = constant;
  for (int l = 0; l < s.num_rrh; ++l)
    for (int k = 0; k < s.num_ir; ++k) v += coeff(l, k) * s.at(l, k);
  return v;
}

namespace {

void require_duals(const conic::PrimalOutcome& o, const model::Selection& s, const char* what) {
  if (o.status != conic::SolveStatus::optimal) throw StructuralError(std::string(what) + ": outcome is not optimal");
  if (o.duals.selection.rows() != s.num_rrh || o.duals.selection.cols() != s.num_ir)
    throw StructuralError(std::string(what) + ": missing selection multipliers");
}

}  // namespace

Cut optimality_cut(const conic::PrimalOutcome& outcome, const model::Selection& s_t, const model::Scenario& sc,
                   double global_lower_bound, int origin_iter) {
  require_duals(outcome, s_t, "optimality_cut");
  const int L = s_t.num_rrh, K = s_t.num_ir;
  Cut c;
  c.kind = CutKind::optimality;
  c.origin_iter = origin_iter;
  c.coeff = Mat::Zero(L, K);
  c.constant = outcome.objective;
  for (int l = 0; l < L; ++l)
    for (int k = 0; k < K; ++k) {
      if (!s_t.at(l, k)) continue;
      const double slope = std::max(0.0, outcome.duals.selection(l, k)) * sc.p_tx_max[static_cast<size_t>(l)];
      c.constant += slope;
      c.coeff(l, k) = -slope;
    }
  const double drop = std::max(0.0, c.constant - global_lower_bound);
  for (int l = 0; l < L; ++l)
    for (int k = 0; k < K; ++k)
      if (!s_t.at(l, k)) c.coeff(l, k) = -drop;
  return c;
}

Cut feasibility_cut(const conic::PrimalOutcome& l1, const model::Selection& s_t, const model::Scenario& sc,
                    int origin_iter) {
  require_duals(l1, s_t, "feasibility_cut");
  if (!(l1.objective > 0.0)) throw StructuralError("feasibility_cut: zero violation, expected an optimality cut");
  const int L = s_t.num_rrh, K = s_t.num_ir;
  Cut c;
  c.kind = CutKind::feasibility;
  c.origin_iter = origin_iter;
  c.coeff = Mat::Zero(L, K);
  c.constant = l1.objective;
  for (int l = 0; l < L; ++l)
    for (int k = 0; k < K; ++k) {
      const double slope = std::max(0.0, l1.duals.selection(l, k)) * sc.p_tx_max[static_cast<size_t>(l)];
      c.constant += slope * s_t.at(l, k);
      c.coeff(l, k) = -slope;
    }
  return c;
}

Cut no_good_cut(const model::Selection& s_t, int origin_iter) {
  Cut c;
  c.kind = CutKind::feasibility;
  c.origin_iter = origin_iter;
  c.coeff = Mat::Zero(s_t.num_rrh, s_t.num_ir);
  c.constant = 1.0 - s_t.count();
  for (int l = 0; l < s_t.num_rrh; ++l)
    for (int k = 0; k < s_t.num_ir; ++k) c.coeff(l, k) = s_t.at(l, k) ? 1.0 : -1.0;
  return c;
}

bool backhaul_feasible(const model::Selection& s, const model::Scenario& sc) {
  const auto rates = sc.backhaul_rates();
  for (int l = 0; l < s.num_rrh; ++l) {
    double load = 0.0;
    for (int k = 0; k < s.num_ir; ++k) load += s.at(l, k) * rates[static_cast<size_t>(k)];
    if (load > sc.backhaul_max[static_cast<size_t>(l)] + 1e-9) return false;
  }
  return true;
}

namespace {

struct MasterData {
  int L = 0, K = 0, n = 0;
  std::vector<double> rates, caps;
  std::vector<const Cut*> opt, feas;
  MasterOptions o;

  double tie(double best) const { return o.tie_tol * std::max(1.0, std::abs(best)); }

  // Exact evaluation of one pattern; returns false when excluded.
  bool evaluate(const model::Selection& s, double& mu) const {
    for (int l = 0; l < L; ++l) {
      double load = 0.0;
      for (int k = 0; k < K; ++k) load += s.at(l, k) * rates[static_cast<size_t>(k)];
      if (load > caps[static_cast<size_t>(l)] + 1e-9) return false;
    }
    for (const Cut* c : feas)
      if (c->evaluate(s) > o.feasibility_tol) return false;
    mu = -std::numeric_limits<double>::infinity();
    for (const Cut* c : opt) mu = std::max(mu, c->evaluate(s));
    return true;
  }

  // Strictly better, or tied and lexicographically smaller.
  bool better(double mu, const model::Selection& s, const MasterResult& best) const {
    if (!best.feasible) return true;
    if (std::isinf(best.mu) || std::isinf(mu)) return mu < best.mu || (mu == best.mu && s < best.s);
    if (mu < best.mu - tie(best.mu)) return true;
    return mu <= best.mu + tie(best.mu) && s < best.s;
  }
};

MasterResult enumerate(const MasterData& d) {
  MasterResult best;
  if (d.n > 30) throw StructuralError("solve_master: too many binaries to enumerate");
  const std::size_t total = std::size_t{1} << d.n;
  std::vector<double> vo(d.opt.size()), vf(d.feas.size()), load(static_cast<size_t>(d.L), 0.0);
  for (size_t j = 0; j < d.opt.size(); ++j) vo[j] = d.opt[j]->constant;
  for (size_t j = 0; j < d.feas.size(); ++j) vf[j] = d.feas[j]->constant;
  model::Selection s(d.L, d.K, 0);
  for (std::size_t g = 0; g < total; ++g) {
    if (g > 0) {
      // Gray code: one bit flips per step.
      const int bit = std::countr_zero(g);
      const int l = bit / d.K, k = bit % d.K;
      const double delta = s.bits[static_cast<size_t>(bit)] ? -1.0 : 1.0;
      s.bits[static_cast<size_t>(bit)] ^= 1;
      for (size_t j = 0; j < d.opt.size(); ++j) vo[j] += delta * d.opt[j]->coeff(l, k);
      for (size_t j = 0; j < d.feas.size(); ++j) vf[j] += delta * d.feas[j]->coeff(l, k);
      load[static_cast<size_t>(l)] += delta * d.rates[static_cast<size_t>(k)];
    }
    ++best.nodes;
    bool ok = true;
    for (int l = 0; l < d.L && ok; ++l) ok = load[static_cast<size_t>(l)] <= d.caps[static_cast<size_t>(l)] + 1e-9;
    for (size_t j = 0; j < vf.size() && ok; ++j) ok = vf[j] <= d.o.feasibility_tol;
    if (!ok) continue;
    double mu = -std::numeric_limits<double>::infinity();
    for (double v : vo) mu = std::max(mu, v);
    if (!d.better(mu, s, best)) continue;
    // Confirm with an exact evaluation to avoid accumulated rounding.
    double exact = 0.0;
    if (!d.evaluate(s, exact) || !d.better(exact, s, best)) continue;
    const int nodes = best.nodes;
    best = MasterResult{true, s, exact, nodes};
  }
  return best;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const MasterData& d) : d_(d) {
    has_mu_ = !d.opt.empty();
    nv_ = d.n + (has_mu_ ? 2 : 0);
    std::vector<Vec> rows;
    std::vector<double> rhs;
    auto cut_row = [&](const Cut& c, bool optimality) {
      Vec r = Vec::Zero(nv_);
      for (int i = 0; i < d.n; ++i) r(i) = c.coeff(i / d.K, i % d.K);
      if (optimality) {
        r(d.n) = -1.0;
        r(d.n + 1) = 1.0;
        rows.push_back(r);
        rhs.push_back(-c.constant);
      } else {
        rows.push_back(r);
        rhs.push_back(d.o.feasibility_tol - c.constant);
      }
    };
    for (const Cut* c : d.opt) cut_row(*c, true);
    for (const Cut* c : d.feas) cut_row(*c, false);
    for (int l = 0; l < d.L; ++l) {
      Vec r = Vec::Zero(nv_);
      for (int k = 0; k < d.K; ++k) r(l * d.K + k) = d.rates[static_cast<size_t>(k)];
      rows.push_back(r);
      rhs.push_back(d.caps[static_cast<size_t>(l)] + 1e-9);
    }
    for (int i = 0; i < d.n; ++i) {
      Vec r = Vec::Zero(nv_);
      r(i) = 1.0;
      rows.push_back(r);
      rhs.push_back(1.0);
    }
    base_a_ = Mat(static_cast<Eigen::Index>(rows.size()), nv_);
    base_b_ = Vec(static_cast<Eigen::Index>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      base_a_.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
      base_b_(static_cast<Eigen::Index>(i)) = rhs[i];
    }
    cost_ = Vec::Zero(nv_);
    if (has_mu_) {
      cost_(d.n) = 1.0;
      cost_(d.n + 1) = -1.0;
    }
  }

  MasterResult run() {
    std::vector<int> fixed;
    dfs(fixed);
    return best_;
  }

 private:
  void dfs(std::vector<int>& fixed) {
    ++best_.nodes;
    const int depth = static_cast<int>(fixed.size());
    if (depth == d_.n) {
      model::Selection s(d_.L, d_.K, 0);
      for (int i = 0; i < d_.n; ++i) s.bits[static_cast<size_t>(i)] = fixed[static_cast<size_t>(i)];
      double mu = 0.0;
      if (d_.evaluate(s, mu) && d_.better(mu, s, best_)) {
        const int nodes = best_.nodes;
        best_ = MasterResult{true, s, mu, nodes};
      }
      return;
    }
    Mat a(base_a_.rows() + depth, nv_);
    Vec b(base_b_.size() + depth);
    a.topRows(base_a_.rows()) = base_a_;
    b.head(base_b_.size()) = base_b_;
    for (int i = 0; i < depth; ++i) {
      Vec r = Vec::Zero(nv_);
      const bool one = fixed[static_cast<size_t>(i)] == 1;
      r(i) = one ? -1.0 : 1.0;
      a.row(base_a_.rows() + i) = r.transpose();
      b(base_b_.size() + i) = one ? -1.0 : 0.0;
    }
    const lp::LpResult r = lp::solve(a, b, cost_);
    if (r.status == lp::LpStatus::infeasible) return;
    if (best_.feasible) {
      // Later leaves are lexicographically larger: only strict improvement counts.
      if (!has_mu_) return;
      if (r.status == lp::LpStatus::optimal && r.value >= best_.mu - d_.tie(best_.mu)) return;
    }
    for (int v : {0, 1}) {
      fixed.push_back(v);
      dfs(fixed);
      fixed.pop_back();
    }
  }

  const MasterData& d_;
  bool has_mu_ = false;
  int nv_ = 0;
  Mat base_a_;
  Vec base_b_;
  Vec cost_;
  MasterResult best_;
};

}  // namespace

MasterResult solve_master(const std::vector<Cut>& cuts, int num_rrh, int num_ir, const std::vector<double>& rates,
                          const std::vector<double>& caps, const MasterOptions& opt) {
  MasterData d;
  d.L = num_rrh;
  d.K = num_ir;
  d.n = num_rrh * num_ir;
  d.rates = rates;
  d.caps = caps;
  d.o = opt;
  if (static_cast<int>(rates.size()) != num_ir || static_cast<int>(caps.size()) != num_rrh)
    throw StructuralError("solve_master: rate or cap size mismatch");
  for (const auto& c : cuts) {
    if (c.coeff.rows() != num_rrh || c.coeff.cols() != num_ir) throw StructuralError("solve_master: cut size mismatch");
    (c.kind == CutKind::optimality ? d.opt : d.feas).push_back(&c);
  }
  const bool use_enum = opt.method == MasterMethod::enumerate ||
                        (opt.method == MasterMethod::automatic && d.n <= opt.enumeration_limit);
  return use_enum ? enumerate(d) : BranchAndBound(d).run();
}

MasterResult solve_master(const std::vector<Cut>& cuts, const model::Scenario& sc, const MasterOptions& opt) {
  return solve_master(cuts, sc.num_rrh, sc.num_ir, sc.backhaul_rates(), sc.backhaul_max, opt);
}

namespace {

std::string fmt_num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string RunTrace::to_csv() const {
  std::ostringstream os;
  os << "iter,UB,LB,status,s\n";
  for (const auto& r : records)
    os << r.iter << ',' << fmt_num(r.ub) << ',' << fmt_num(r.lb) << ',' << r.status << ',' << r.s.bitstring() << '\n';
  return os.str();
}

void RunTrace::write_csv(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << to_csv();
}

model::Selection random_selection(int num_rrh, int num_ir, std::uint64_t seed) {
  const CounterRng rng(seed);
  model::Selection s(num_rrh, num_ir, 0);
  for (int i = 0; i < s.size(); ++i)
    s.bits[static_cast<size_t>(i)] = rng.uniform2(kPurposeMasterInit, static_cast<std::uint32_t>(i), 0, 0)[0] < 0.5;
  return s;
}

GbdResult run_gbd(const model::Scenario& sc, const GbdOptions& opt) {
  sc.validate();
  if (opt.kappa < 0.0 || opt.max_iter < 1) throw StructuralError("run_gbd: kappa must be >= 0 and max_iter >= 1");
  const int L = sc.num_rrh, K = sc.num_ir;
  GbdResult res;
  const model::Selection ones = model::Selection::all_ones(L, K);

  // Every pattern's feasible set is contained in the all-ones one, so its
  // optimum bounds every pattern from below and its infeasibility is final.
  conic::BuiltProgram ref_bp = conic::build_primal(sc, ones, opt.build);
  conic::PrimalOutcome ref = conic::solve_program(ref_bp, sc, opt.solver);
  if (ref.status == conic::SolveStatus::infeasible)
    throw InfeasibleError("run_gbd: infeasible even with full cooperation");
  if (ref.status != conic::SolveStatus::optimal)
    throw std::runtime_error("run_gbd: full-cooperation solve failed: " + ref.raw.message);
  const double global_lb = ref.objective;
  res.cuts.push_back(optimality_cut(ref, ones, sc, global_lb, 0));

  model::Selection s = opt.initial ? *opt.initial : ones;
  if (s.num_rrh != L || s.num_ir != K) throw StructuralError("run_gbd: initial selection size mismatch");
  std::set<model::Selection> visited;
  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
  std::optional<conic::BuiltProgram> best_bp;
  conic::PrimalOutcome best_out;
  res.status = GbdStatus::iteration_limit;

  for (int iter = 1; iter <= opt.max_iter; ++iter) {
    res.iterations = iter;
    conic::BuiltProgram bp = s == ones ? ref_bp : conic::build_primal(sc, s, opt.build);
    conic::PrimalOutcome out = s == ones ? ref : conic::solve_program(bp, sc, opt.solver);
    TraceRecord rec;
    rec.iter = iter;
    rec.s = s;
    rec.status = conic::to_string(out.status);
    if (out.status == conic::SolveStatus::optimal) {
      rec.value = out.objective;
      if (backhaul_feasible(s, sc) && out.objective < ub) {
        ub = out.objective;
        best_bp = bp;
        best_out = out;
      }
      if (!(s == ones)) res.cuts.push_back(optimality_cut(out, s, sc, global_lb, iter));
    } else {
      const conic::PrimalOutcome l1 = conic::solve_l1(sc, s, opt.solver, opt.build);
      rec.value = l1.status == conic::SolveStatus::optimal ? l1.objective : std::numeric_limits<double>::quiet_NaN();
      if (l1.status == conic::SolveStatus::optimal && l1.objective > opt.infeasible_alpha)
        res.cuts.push_back(feasibility_cut(l1, s, sc, iter));
      else
        res.cuts.push_back(no_good_cut(s, iter));
    }
    visited.insert(s);

    const MasterResult m = solve_master(res.cuts, sc, opt.master);
    if (!m.feasible) {
      if (!std::isfinite(ub)) throw InfeasibleError("run_gbd: every selection is excluded");
      // The incumbent stays feasible for the master, so this is unreachable in
      // exact arithmetic; treat the incumbent as optimal.
      lb = ub;
    } else {
      lb = std::max(lb, m.mu);
    }
    rec.ub = ub;
    rec.lb = lb;
    res.trace.records.push_back(rec);

    const double tol = opt.kappa_relative ? opt.kappa * std::abs(ub) : opt.kappa;
    if (std::isfinite(ub) && ub - lb <= tol) {
      res.status = GbdStatus::optimal;
      break;
    }
    if (visited.count(m.s)) {
      res.status = GbdStatus::repeated_pattern;
      break;
    }
    s = m.s;
  }

  res.trace.final_status = to_string(res.status);
  if (!best_bp) throw InfeasibleError("run_gbd: no feasible selection found within the iteration budget");
  res.objective = ub;
  res.lower_bound = lb;
  res.s = best_bp->s;
  auto rec = conic::recover_rank_one(*best_bp, sc, best_out);
  res.policy = std::move(rec.policy);
  res.beams = std::move(rec.beams);
  res.recovery = rec.report;
  return res;
}

}  // namespace swipt::gbd
