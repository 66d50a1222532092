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

// Acceptance checks. Prints one PASS/FAIL line per criterion; exit status is
// the number of failed criteria.

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swipt/common.hpp"
#include "swipt/conic/primal.hpp"
#include "swipt/conic/rank_one.hpp"
#include "swipt/experiment.hpp"
#include "swipt/gbd.hpp"
#include "swipt/model.hpp"
#include "swipt/rng.hpp"
#include "swipt/robust.hpp"
#include "swipt/sca.hpp"
#include "swipt/scenario.hpp"

using namespace swipt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failed = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail, double secs) {
  std::printf("[%s] criterion %d: %s (%s; %.1f s)\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++g_failed;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

model::Scenario tiny(std::uint64_t seed) { return scenario::generate(scenario::preset("tiny"), seed); }

// Per-pattern SDP optimum for every binary selection; nullopt when the
// fixed-selection program is infeasible.
struct PatternOracle {
  std::vector<model::Selection> patterns;
  std::vector<std::optional<double>> value;
};

PatternOracle enumerate_patterns(const model::Scenario& sc) {
  PatternOracle o;
  const int n = sc.num_rrh * sc.num_ir;
  for (int mask = 0; mask < (1 << n); ++mask) {
    model::Selection s(sc.num_rrh, sc.num_ir, 0);
    for (int i = 0; i < n; ++i) s.bits[static_cast<size_t>(i)] = (mask >> i) & 1;
    const auto out = conic::solve_primal(sc, s);
    o.patterns.push_back(s);
    if (out.status == conic::SolveStatus::optimal)
      o.value.emplace_back(out.objective);
    else if (out.status == conic::SolveStatus::infeasible)
      o.value.emplace_back(std::nullopt);
    else
      throw std::runtime_error("oracle solve failed: " + out.raw.message);
  }
  return o;
}

bool meets_backhaul(const model::Selection& s, const model::Scenario& sc) {
  const auto rates = sc.backhaul_rates();
  for (int l = 0; l < sc.num_rrh; ++l) {
    double use = 0.0;
    for (int k = 0; k < sc.num_ir; ++k) use += s.at(l, k) * rates[static_cast<size_t>(k)];
    if (use > sc.backhaul_max[static_cast<size_t>(l)] * (1 + 1e-12)) return false;
  }
  return true;
}

std::optional<double> oracle_minimum(const PatternOracle& o, const model::Scenario& sc) {
  std::optional<double> best;
  for (size_t i = 0; i < o.patterns.size(); ++i)
    if (o.value[i] && meets_backhaul(o.patterns[i], sc) && (!best || *o.value[i] < *best)) best = o.value[i];
  return best;
}

bool trace_monotone(const gbd::RunTrace& t, std::string* why) {
  for (size_t i = 1; i < t.records.size(); ++i) {
    const auto& a = t.records[i - 1];
    const auto& b = t.records[i];
    if (std::isfinite(a.ub) && b.ub > a.ub * (1 + 1e-12)) {
      *why = fmt("UB rose at iter %d", b.iter);
      return false;
    }
    if (std::isfinite(a.lb) && b.lb < a.lb - 1e-12 * std::abs(a.lb)) {
      *why = fmt("LB fell at iter %d", b.iter);
      return false;
    }
  }
  return true;
}

// Independent uniform sampler of { d : d^H xi d <= eps^2 }: z uniform in the
// complex eps-ball, d = chol(xi)^{-H} z. Every other draw lies on the boundary.
CVec sample_ball(const CMat& xi, double eps, const CounterRng& rng, std::uint32_t a, std::uint32_t b) {
  const int n = static_cast<int>(xi.rows());
  CVec z(n);
  for (int i = 0; i < n; ++i) z(i) = rng.complex_normal(kPurposeTest, a, b, static_cast<std::uint32_t>(i));
  const double u = rng.uniform2(kPurposeTest, a, b, 1000)[0];
  const double r = (b % 2 == 0) ? 1.0 : std::pow(u, 1.0 / (2.0 * n));
  z *= eps * r / z.norm();
  Eigen::LLT<CMat> llt(xi);
  return llt.matrixU().solve(z);
}

std::string policy_sampling_violation(const model::Policy& p, const model::Scenario& sc, int samples,
                                      std::uint64_t tag) {
  const CounterRng rng(tag);
  for (int m = 0; m < sc.num_er; ++m) {
    for (int i = 0; i < samples; ++i) {
      const CVec g = sc.g_hat[m] + sample_ball(sc.xi[m], sc.eps[m], rng, static_cast<std::uint32_t>(m),
                                               static_cast<std::uint32_t>(i));
      for (int k = 0; k < sc.num_ir; ++k) {
        const double sinr = model::er_sinr(p, g, k, sc.sigma_s_sq);
        if (sinr > sc.tol_for_er(m) * (1 + 1e-6)) return fmt("ER %d sample %d: SINR %.6g", m, i, sinr);
      }
      const double e = model::harvested_power(p, g, sc.harvest_efficiency);
      if (e < sc.p_min_er[m] * (1 - 1e-6)) return fmt("ER %d sample %d: harvest %.6g", m, i, e);
    }
  }
  return "";
}

std::vector<double> eigen_desc(const CMat& w) {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (w + w.adjoint()));
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.rbegin(), v.rend());
  return v;
}

CMat random_psd(int n, int rank, const CounterRng& rng, std::uint32_t a, std::uint32_t b) {
  CMat f(n, rank);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) f(i, j) = rng.complex_normal(kPurposeTest, a, b, static_cast<std::uint32_t>(100 + i * 16 + j));
  return f * f.adjoint();
}

}  // namespace

int main() {
  std::printf("acceptance: robust secure SWIPT resource allocation\n");
  constexpr int kSeeds = 20;

  // Shared tiny runs: GBD and SCA over seeds 1..20.
  std::map<std::uint64_t, std::optional<gbd::GbdResult>> gbd_runs;
  std::map<std::uint64_t, std::optional<sca::ScaResult>> sca_runs;
  std::vector<model::Policy> all_policies;
  std::vector<model::Scenario> all_scenarios;

  // 1. Enumeration oracle.
  {
    const auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    int checked = 0;
    gbd::GbdOptions opt;
    opt.kappa = 1e-4;
    for (std::uint64_t seed = 1; checked < 5 && seed <= 50; ++seed) {
      const auto sc = tiny(seed);
      const auto oracle = enumerate_patterns(sc);
      const auto best = oracle_minimum(oracle, sc);
      if (!best) continue;  // instance infeasible; not one of the five
      const auto t1 = Clock::now();
      const auto r = gbd::run_gbd(sc, opt);
      const double secs = seconds_since(t1);
      const double rel = std::abs(r.objective - *best) / std::abs(*best);
      detail += fmt("seed %llu rel %.1e %.1fs; ", static_cast<unsigned long long>(seed), rel, secs);
      if (rel > 1e-4 || secs > 300.0) pass = false;
      ++checked;
    }
    if (checked < 5) pass = false;
    if (detail.size() >= 2) detail.resize(detail.size() - 2);
    report(1, "GBD equals the enumeration minimum on 5 tiny instances", pass, detail, seconds_since(t0));
  }

  // 2 and 3 share the 20-seed runs.
  const auto t23 = Clock::now();
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    const auto sc = tiny(seed);
    try {
      gbd_runs[seed] = gbd::run_gbd(sc);
      all_policies.push_back(gbd_runs[seed]->policy);
      all_scenarios.push_back(sc);
    } catch (const InfeasibleError&) {
      gbd_runs[seed] = std::nullopt;
    }
    try {
      sca_runs[seed] = sca::run_sca(sc);
      all_policies.push_back(sca_runs[seed]->policy);
      all_scenarios.push_back(sc);
    } catch (const InfeasibleError&) {
      sca_runs[seed] = std::nullopt;
    }
  }
  const double shared_secs = seconds_since(t23);

  // 2. GBD ledger.
  {
    bool pass = true;
    std::string detail;
    int max_iter = 0, runs = 0;
    for (const auto& [seed, r] : gbd_runs) {
      if (!r) continue;
      ++runs;
      std::string why;
      if (!trace_monotone(r->trace, &why)) {
        pass = false;
        detail += fmt("seed %llu %s; ", static_cast<unsigned long long>(seed), why.c_str());
      }
      const bool gap_ok = r->objective - r->lower_bound <= 1e-3 * std::abs(r->objective);
      if (r->status == gbd::GbdStatus::optimal && !gap_ok) {
        pass = false;
        detail += fmt("seed %llu optimal with gap; ", static_cast<unsigned long long>(seed));
      }
      max_iter = std::max(max_iter, r->iterations);
    }
    if (max_iter > 18) pass = false;
    detail += fmt("%d feasible runs, max %d iterations (limit 18)", runs, max_iter);
    report(2, "GBD bounds monotone and converged within 2^4+2 iterations", pass, detail, shared_secs);
  }

  // 3. SCA quality and speed; infeasible seeds count against the ratios.
  {
    bool pass = true;
    int within = 0, binary = 0, agree_infeasible = 0;
    std::string detail;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      const auto& g = gbd_runs[seed];
      const auto& s = sca_runs[seed];
      if (!g || !s) {
        if (!g && !s) {
          ++agree_infeasible;
        } else if (s && !g) {
          pass = false;
          detail += fmt("seed %llu SCA feasible but GBD not; ", static_cast<unsigned long long>(seed));
        }
        continue;
      }
      if (s->objective < g->objective * (1 - 1e-6)) {
        pass = false;
        detail += fmt("seed %llu SCA below GBD; ", static_cast<unsigned long long>(seed));
      }
      if (s->objective <= 1.1 * g->objective) ++within;
      for (size_t i = 1; i < s->penalized.size(); ++i)
        if (s->penalized[i] > s->penalized[i - 1] * (1 + 1e-6)) {
          pass = false;
          detail += fmt("seed %llu penalized rose; ", static_cast<unsigned long long>(seed));
          break;
        }
      if (s->binary_iteration >= 1 && s->binary_iteration <= 10) ++binary;
    }
    if (within < 0.8 * kSeeds || binary < 0.8 * kSeeds) pass = false;
    detail += fmt("within 10%%: %d/%d, binary in <=10 iters: %d/%d, both infeasible: %d", within, kSeeds, binary,
                  kSeeds, agree_infeasible);
    report(3, "SCA quality and speed on 20 tiny seeds", pass, detail, shared_secs);
  }

  // 4. Secrecy-rate constant.
  {
    const auto t0 = Clock::now();
    double sum = 0.0;
    for (double db : {6.0, 9.0, 12.0, 15.0, 18.0}) sum += model::secrecy_rate(db_to_linear(db), db_to_linear(0.0));
    const double published = 15.5818;
    const bool pass = std::abs(std::round(sum * 1e4) / 1e4 - published) < 1e-9;
    report(4, "summed secrecy rate equals 15.5818 bits/s/Hz", pass, fmt("computed %.6f", sum), seconds_since(t0));
  }

  // 5. Robustness of every returned policy: trust-region oracle plus sampling.
  {
    const auto t0 = Clock::now();
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto sc = scenario::generate(scenario::preset("desk"), seed);
      try {
        all_policies.push_back(gbd::run_gbd(sc).policy);
        all_scenarios.push_back(sc);
      } catch (const InfeasibleError&) {
      }
    }
    bool pass = !all_policies.empty();
    std::string detail;
    for (size_t i = 0; i < all_policies.size(); ++i) {
      const auto rob = robust::verify_policy_robust(all_policies[i], all_scenarios[i], 1e-6);
      if (!rob.satisfied()) {
        pass = false;
        detail += "oracle: " + rob.summary() + "; ";
      }
      const std::string v = policy_sampling_violation(all_policies[i], all_scenarios[i], 10000, 1000 + i);
      if (!v.empty()) {
        pass = false;
        detail += "sampling: " + v + "; ";
      }
    }
    detail += fmt("%zu policies, 10^4 samples per ER", all_policies.size());
    report(5, "every returned policy is robust", pass, detail, seconds_since(t0));
  }

  // 6. S-procedure decision versus the trust-region oracle.
  {
    const auto t0 = Clock::now();
    const CounterRng rng(606);
    int agree = 0, total = 0;
    for (std::uint32_t i = 0; total < 100 && i < 1000; ++i) {
      const int n = 2 + static_cast<int>(i % 3);
      const CMat xi = random_psd(n, n, rng, i, 1) + 0.2 * CMat::Identity(n, n);
      CVec gh(n);
      for (int j = 0; j < n; ++j) gh(j) = rng.complex_normal(kPurposeTest, i, 2, static_cast<std::uint32_t>(j));
      const double eps = 0.6 * rng.uniform2(kPurposeTest, i, 3, 0)[0] * std::sqrt((gh.adjoint() * xi * gh).real()(0));
      const double factor = 0.5 + rng.uniform2(kPurposeTest, i, 3, 1)[0];
      bool lmi = false, oracle = false;
      if (i % 2 == 0) {
        const CMat w = random_psd(n, 1, rng, i, 4);
        const CMat v = 0.3 * random_psd(n, 1 + static_cast<int>(i % 2), rng, i, 5);
        const double sigma = 0.1;
        const double worst = robust::worst_case_er_sinr(w, v, gh, xi, eps, sigma);
        const double gamma = worst * factor;
        if (std::abs(worst / gamma - 1.0) <= 1e-6) continue;
        oracle = worst <= gamma;
        lmi = robust::eavesdrop_lmi_feasible(w, v, gh, xi, eps, gamma, sigma).feasible;
      } else {
        const std::vector<CMat> w{random_psd(n, 1, rng, i, 4), random_psd(n, 1, rng, i, 6)};
        const CMat v = 0.3 * random_psd(n, 1, rng, i, 5) + 0.05 * CMat::Identity(n, n);
        const double mu = 0.5;
        const double worst = robust::worst_case_harvest(w, v, gh, xi, eps, mu);
        const double pmin = worst * factor;
        if (std::abs(worst / pmin - 1.0) <= 1e-6) continue;
        oracle = worst >= pmin;
        lmi = robust::harvest_lmi_feasible(w, v, gh, xi, eps, pmin, mu).feasible;
      }
      ++total;
      if (lmi == oracle) ++agree;
    }
    report(6, "S-procedure LMI agrees with the trust-region oracle", agree == 100 && total == 100,
           fmt("%d/%d", agree, total), seconds_since(t0));
  }

  // 7. Rank-one recovery on 20 seeded full-cooperation solves.
  {
    const auto t0 = Clock::now();
    bool pass = true;
    int solves = 0;
    double worst_ratio = 0.0, worst_change = 0.0;
    std::string detail;
    for (std::uint64_t seed = 1; solves < 20 && seed <= 40; ++seed) {
      const auto sc = scenario::generate(scenario::preset("desk"), seed);
      const auto ones = model::Selection::all_ones(sc.num_rrh, sc.num_ir);
      const auto bp = conic::build_primal(sc, ones);
      const auto out = conic::solve_program(bp, sc);
      if (out.status != conic::SolveStatus::optimal) continue;
      ++solves;
      try {
        const auto rec = conic::recover_rank_one(bp, sc, out);
        for (const auto& w : rec.policy.w) {
          const auto ev = eigen_desc(w);
          if (ev.size() > 1 && ev[0] > 0.0) worst_ratio = std::max(worst_ratio, ev[1] / ev[0]);
        }
        const double change = std::abs(rec.policy.objective() - out.objective) / std::abs(out.objective);
        worst_change = std::max(worst_change, change);
        const auto det = model::check_deterministic(rec.policy, sc, 1e-6);
        const auto rob = robust::verify_policy_robust(rec.policy, sc, 1e-6);
        if (!det.satisfied() || !rob.satisfied()) {
          pass = false;
          detail += fmt("seed %llu fails re-verification; ", static_cast<unsigned long long>(seed));
        }
      } catch (const conic::RecoveryError& e) {
        pass = false;
        detail += fmt("seed %llu: %s; ", static_cast<unsigned long long>(seed), e.what());
      }
    }
    if (solves < 20 || worst_ratio > 1e-6 || worst_change > 1e-6) pass = false;
    detail += fmt("%d solves, max lambda2/lambda1 %.1e, max objective change %.1e", solves, worst_ratio, worst_change);
    report(7, "rank-one recovery", pass, detail, seconds_since(t0));
  }

  // 8. Cut validity against re-solved primal optima at every pattern.
  {
    const auto t0 = Clock::now();
    bool pass = true;
    int opt_cuts = 0, feas_cuts = 0, instances = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    std::string detail;
    for (std::uint64_t seed = 1; instances < 5 && seed <= 50; ++seed) {
      const auto sc = tiny(seed);
      const auto oracle = enumerate_patterns(sc);
      if (!oracle_minimum(oracle, sc)) continue;
      gbd::GbdOptions gopt;
      gopt.kappa = 1e-4;
      const auto r = gbd::run_gbd(sc, gopt);
      ++instances;
      for (const auto& cut : r.cuts) {
        const model::Selection origin = cut.origin_iter == 0
                                            ? model::Selection::all_ones(sc.num_rrh, sc.num_ir)
                                            : r.trace.records[static_cast<size_t>(cut.origin_iter - 1)].s;
        if (cut.kind == gbd::CutKind::optimality) {
          ++opt_cuts;
          for (size_t i = 0; i < oracle.patterns.size(); ++i) {
            if (!oracle.value[i]) continue;
            const double slack = *oracle.value[i] - cut.evaluate(oracle.patterns[i]);
            worst_slack = std::min(worst_slack, slack);
            if (slack < -1e-5) pass = false;
          }
        } else {
          ++feas_cuts;
          if (cut.evaluate(origin) <= 1e-6) {
            pass = false;
            detail += fmt("seed %llu cut keeps its pattern; ", static_cast<unsigned long long>(seed));
          }
          for (size_t i = 0; i < oracle.patterns.size(); ++i) {
            if (oracle.value[i] && cut.evaluate(oracle.patterns[i]) > 1e-6) {
              pass = false;
              detail += fmt("seed %llu cut removes feasible %s; ", static_cast<unsigned long long>(seed),
                            oracle.patterns[i].bitstring().c_str());
            }
          }
          const auto it = std::find(oracle.patterns.begin(), oracle.patterns.end(), origin);
          if (oracle.value[static_cast<size_t>(it - oracle.patterns.begin())]) {
            pass = false;
            detail += fmt("seed %llu feasibility cut from a feasible pattern; ", static_cast<unsigned long long>(seed));
          }
        }
      }
    }
    detail += fmt("%d instances, %d optimality cuts (min slack %.2e), %d feasibility cuts", instances, opt_cuts,
                  worst_slack, feas_cuts);
    report(8, "optimality and feasibility cuts are valid", pass && instances == 5, detail, seconds_since(t0));
  }

  // 9. Trends over 20 matched seeds through the experiment runner.
  {
    const auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    auto run = [&](const std::string& exp, std::vector<double> sweep) {
      experiment::ExperimentSpec spec;
      spec.experiment = exp;
      spec.params = scenario::preset("tiny");
      spec.sweep = std::move(sweep);
      spec.seeds.clear();
      for (std::uint64_t s = 1; s <= kSeeds; ++s) spec.seeds.push_back(s);
      spec.algorithms = {"gbd"};
      spec.output_dir = "acceptance_out/" + exp;
      return experiment::run_experiment(spec).summary;
    };
    auto series = [](const std::vector<experiment::SummaryRow>& rows, bool harvested) {
      std::vector<double> v;
      for (const auto& r : rows) v.push_back(harvested ? r.harvested_w : r.objective_w);
      return v;
    };
    auto monotone = [](const std::vector<double>& v, int dir) {
      for (size_t i = 1; i < v.size(); ++i)
        if (dir * (v[i] - v[i - 1]) < -1e-9 * std::abs(v[i - 1])) return false;
      return true;
    };
    auto show = [](const std::vector<double>& v) {
      std::string s = "[";
      for (size_t i = 0; i < v.size(); ++i) s += fmt(i ? " %.4g" : "%.4g", v[i]);
      return s + "]";
    };
    const auto ant = run("power_vs_antennas", {4, 6, 8});
    const auto p_ant = series(ant, false);
    const bool ok_ant = monotone(p_ant, -1);
    const auto bh = run("power_vs_backhaul", {2.3, 23.0});
    const auto p_bh = series(bh, false);
    const bool ok_bh = monotone(p_bh, -1);
    const auto csi = run("power_vs_csi_error", {0.0, 0.025, 0.05});
    const auto p_csi = series(csi, false);
    const auto h_csi = series(csi, true);
    const bool ok_csi = monotone(p_csi, +1);
    const bool ok_h = monotone(h_csi, +1);
    pass = ok_ant && ok_bh && ok_csi && ok_h;
    detail = fmt("power vs Nt*L {4,6,8} %s %s, seeds %d; ", show(p_ant).c_str(), ok_ant ? "ok" : "WRONG",
                 ant.front().seeds) +
             fmt("power vs backhaul {tight,loose} %s %s, seeds %d; ", show(p_bh).c_str(), ok_bh ? "ok" : "WRONG",
                 bh.front().seeds) +
             fmt("power vs sigma^2 %s %s; harvested vs sigma^2 %s %s, seeds %d", show(p_csi).c_str(),
                 ok_csi ? "ok" : "WRONG", show(h_csi).c_str(), ok_h ? "ok" : "WRONG", csi.front().seeds);
    report(9, "trends over 20 matched seeds", pass, detail, seconds_since(t0));
  }

  std::printf("acceptance: %d criterion(s) failed\n", g_failed);
  return g_failed;
}
