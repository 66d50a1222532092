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

#include "swipt/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "swipt/robust.hpp"

namespace swipt::experiment {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

BaselineResult solve_all_ones(const model::Scenario& sc, const conic::BuildOptions& bo,
                              const conic::SolverOptions& opt, const char* what) {
  const auto ones = model::Selection::all_ones(sc.num_rrh, sc.num_ir);
  const conic::BuiltProgram bp = conic::build_primal(sc, ones, bo);
  const conic::PrimalOutcome out = conic::solve_program(bp, sc, opt);
  if (out.status == conic::SolveStatus::infeasible) throw InfeasibleError(std::string(what) + ": infeasible");
  if (out.status != conic::SolveStatus::optimal)
    throw std::runtime_error(std::string(what) + ": solver failed: " + out.raw.message);
  auto rec = conic::recover_rank_one(bp, sc, out);
  BaselineResult r;
  r.objective = out.objective;
  r.policy = std::move(rec.policy);
  r.beams = std::move(rec.beams);
  r.recovery = rec.report;
  r.scenario = sc;
  return r;
}

model::Scenario without_backhaul_cap(const model::Scenario& sc) {
  model::Scenario out = sc;
  std::fill(out.backhaul_max.begin(), out.backhaul_max.end(), kInf);
  return out;
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_text(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SWIPT_NUM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

bool is_antenna_sweep(const std::string& e) { return e == "power_vs_antennas" || e == "harvested_vs_antennas"; }
bool is_csi_sweep(const std::string& e) { return e == "power_vs_csi_error" || e == "harvested_vs_csi_error"; }

}  // namespace

BaselineResult baseline_full_cooperation(const model::Scenario& sc, const conic::SolverOptions& opt) {
  return solve_all_ones(without_backhaul_cap(sc), {}, opt, "full cooperation");
}

BaselineResult baseline_no_energy_share(const model::Scenario& sc, const conic::SolverOptions& opt) {
  conic::BuildOptions bo;
  bo.energy = conic::EnergyMode::per_rrh;
  return solve_all_ones(without_backhaul_cap(sc), bo, opt, "no energy sharing");
}

BaselineResult baseline_colocated(const model::Scenario& sc, double sigma_est_sq, const conic::SolverOptions& opt) {
  model::Scenario cs = scenario::colocated(sc, sigma_est_sq);
  std::fill(cs.p_tx_max.begin(), cs.p_tx_max.end(), kInf);
  conic::BuildOptions bo;
  bo.energy = conic::EnergyMode::unlimited;
  return solve_all_ones(cs, bo, opt, "colocated");
}

double harvested_total(const model::Policy& p, const model::Scenario& sc) {
  double e = 0.0;
  for (const auto& g : sc.g_hat) e += model::harvested_power(p, g, sc.harvest_efficiency);
  return e;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"convergence",           "power_vs_antennas",     "power_vs_csi_error",
                                              "harvested_vs_antennas", "harvested_vs_csi_error", "power_vs_backhaul"};
  return names;
}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"gbd", "sca", "full_coop", "full_coop_no_energy_share", "colocated"};
  return names;
}

std::string sweep_param(const std::string& experiment) {
  if (is_antenna_sweep(experiment)) return "total_antennas";
  if (is_csi_sweep(experiment)) return "sigma_est_sq";
  if (experiment == "power_vs_backhaul") return "backhaul_max";
  if (experiment == "convergence") return "none";
  throw StructuralError("unknown experiment: " + experiment);
}

std::vector<double> default_sweep(const std::string& experiment, const scenario::ParameterSet& p) {
  if (is_antenna_sweep(experiment)) return {2.0 * p.num_rrh, 3.0 * p.num_rrh, 4.0 * p.num_rrh};
  if (is_csi_sweep(experiment)) return {0.0, 0.025, 0.05};
  if (experiment == "power_vs_backhaul") return {p.backhaul_max, 10.0 * p.backhaul_max};
  if (experiment == "convergence") return {0.0};
  throw StructuralError("unknown experiment: " + experiment);
}

scenario::ParameterSet apply_sweep(const scenario::ParameterSet& p, const std::string& experiment, double value) {
  scenario::ParameterSet q = p;
  if (is_antenna_sweep(experiment)) {
    const double nt = value / p.num_rrh;
    if (nt < 1.0 || std::abs(nt - std::round(nt)) > 1e-9)
      throw StructuralError("total antenna count must be a positive multiple of the RRH count");
    q.antennas_per_rrh = static_cast<int>(std::lround(nt));
  } else if (is_csi_sweep(experiment)) {
    q.sigma_est_sq = value;
  } else if (experiment == "power_vs_backhaul") {
    q.backhaul_max = value;
  } else if (experiment != "convergence") {
    throw StructuralError("unknown experiment: " + experiment);
  }
  return q;
}

void validate(const ExperimentSpec& spec) {
  const auto& en = experiment_names();
  if (std::find(en.begin(), en.end(), spec.experiment) == en.end())
    throw StructuralError("unknown experiment: " + spec.experiment);
  if (spec.seeds.empty()) throw StructuralError("experiment needs at least one seed");
  if (spec.algorithms.empty()) throw StructuralError("experiment needs at least one algorithm");
  const auto& an = algorithm_names();
  for (const auto& a : spec.algorithms)
    if (std::find(an.begin(), an.end(), a) == an.end()) throw StructuralError("unknown algorithm: " + a);
  if (spec.experiment == "convergence") return;  // no sweep axis
  for (double v : spec.sweep) {
    // A CSI error of zero is the perfect-CSI point; every other sweep is positive.
    if (!(v > 0.0) && !(is_csi_sweep(spec.experiment) && v == 0.0))
      throw StructuralError("sweep values must be positive");
  }
}

bool RunRecord::ok() const { return status != "infeasible" && status != "unverified" && status != "error"; }

RunRecord run_one(const ExperimentSpec& spec, std::uint64_t seed, const std::string& algorithm, double sweep_value,
                  std::string* trace_csv) {
  RunRecord r;
  r.seed = seed;
  r.algorithm = algorithm;
  r.sweep_value = sweep_value;
  r.objective_w = kNaN;
  r.harvested_w = kNaN;
  try {
    const scenario::ParameterSet p = apply_sweep(spec.params, spec.experiment, sweep_value);
    const model::Scenario sc = scenario::generate(p, seed);
    model::Policy policy;
    model::Scenario used = sc;
    auto accounting = model::EnergyAccounting::pooled;
    bool check_backhaul = true;
    if (algorithm == "gbd") {
      const auto g = gbd::run_gbd(sc, spec.gbd);
      policy = g.policy;
      r.objective_w = g.objective;
      r.iterations = g.iterations;
      r.status = gbd::to_string(g.status);
      if (trace_csv) *trace_csv = g.trace.to_csv();
    } else if (algorithm == "sca") {
      const auto s = sca::run_sca(sc, spec.sca);
      policy = s.policy;
      r.objective_w = s.objective;
      r.iterations = s.iterations;
      r.status = s.converged ? "converged" : "iteration_limit";
      if (trace_csv) *trace_csv = s.trace.to_csv();
    } else {
      BaselineResult b;
      if (algorithm == "full_coop") {
        b = baseline_full_cooperation(sc, spec.gbd.solver);
      } else if (algorithm == "full_coop_no_energy_share") {
        b = baseline_no_energy_share(sc, spec.gbd.solver);
        accounting = model::EnergyAccounting::per_rrh;
      } else if (algorithm == "colocated") {
        b = baseline_colocated(sc, p.sigma_est_sq, spec.gbd.solver);
        accounting = model::EnergyAccounting::none;
      } else {
        throw StructuralError("unknown algorithm: " + algorithm);
      }
      policy = b.policy;
      used = b.scenario;
      r.objective_w = b.objective;
      r.iterations = 1;
      r.status = "optimal";
      check_backhaul = false;
    }
    auto det = model::check_deterministic(policy, used, 1e-6, accounting);
    if (!check_backhaul)
      std::erase_if(det.entries, [](const model::ConstraintSlack& e) { return e.name.rfind("backhaul", 0) == 0; });
    const auto rob = robust::verify_policy_robust(policy, used, 1e-6);
    if (!det.satisfied() || !rob.satisfied()) {
      r.status = "unverified";
      r.message = !det.satisfied() ? det.summary() : rob.summary();
      r.objective_w = kNaN;
      return r;
    }
    r.harvested_w = harvested_total(policy, used);
  } catch (const InfeasibleError& e) {
    r.status = "infeasible";
    r.message = e.what();
    r.objective_w = kNaN;
  } catch (const conic::RecoveryError& e) {
    r.status = "unverified";
    r.message = e.what();
    r.objective_w = kNaN;
  } catch (const StructuralError&) {
    throw;
  } catch (const std::exception& e) {
    r.status = "error";
    r.message = e.what();
    r.objective_w = kNaN;
  }
  return r;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records, const std::vector<double>& sweep) {
  std::vector<std::string> algos;
  for (const auto& r : records)
    if (std::find(algos.begin(), algos.end(), r.algorithm) == algos.end()) algos.push_back(r.algorithm);
  std::vector<SummaryRow> out;
  for (const auto& a : algos) {
    // Seeds that succeeded at every sweep point.
    std::map<std::uint64_t, int> good;
    for (const auto& r : records)
      if (r.algorithm == a && r.ok()) ++good[r.seed];
    std::set<std::uint64_t> matched;
    for (const auto& [seed, n] : good)
      if (n == static_cast<int>(sweep.size())) matched.insert(seed);
    for (double v : sweep) {
      SummaryRow row;
      row.algorithm = a;
      row.sweep_value = v;
      double obj = 0.0, harv = 0.0;
      for (const auto& r : records) {
        if (r.algorithm != a || r.sweep_value != v || !matched.count(r.seed)) continue;
        obj += r.objective_w;
        harv += r.harvested_w;
        ++row.seeds;
      }
      row.objective_w = row.seeds > 0 ? obj / row.seeds : kNaN;
      row.harvested_w = row.seeds > 0 ? harv / row.seeds : kNaN;
      out.push_back(row);
    }
  }
  return out;
}

namespace {

std::string gnuplot_script(const ExperimentSpec& spec) {
  std::ostringstream os;
  os << "# gnuplot -p plot.gp\n";
  os << "set datafile separator ','\n";
  os << "set key outside right\n";
  os << "set grid\n";
  if (spec.experiment == "convergence") {
    os << "set xlabel 'iteration'\nset ylabel 'objective (W)'\n";
    os << "set title 'convergence, seed " << spec.seeds.front() << "'\n";
    os << "plot ";
    bool first = true;
    for (const auto& a : spec.algorithms) {
      if (a != "gbd" && a != "sca") continue;
      const std::string f = "convergence_" + a + "_seed" + std::to_string(spec.seeds.front()) + ".csv";
      if (!first) os << ", \\\n     ";
      os << "'" << f << "' every ::1 using 1:2 with linespoints title '" << a << " UB', "
         << "'" << f << "' every ::1 using 1:3 with linespoints title '" << a << " LB'";
      first = false;
    }
    os << "\n";
    return os.str();
  }
  const bool harvested = spec.experiment.rfind("harvested", 0) == 0;
  const int col = harvested ? 8 : 6;
  os << "set xlabel '" << sweep_param(spec.experiment) << "'\n";
  os << "set ylabel '" << (harvested ? "average total harvested power (dBm)" : "average total transmit power (dBm)")
     << "'\n";
  os << "algos = '";
  for (size_t i = 0; i < spec.algorithms.size(); ++i) os << (i ? " " : "") << spec.algorithms[i];
  os << "'\n";
  os << "plot for [a in algos] 'summary.csv' every ::1 using (strcol(1) eq a ? $3 : NaN):(strcol(1) eq a ? $" << col
     << " : NaN) with linespoints title a\n";
  return os.str();
}

}  // namespace

ExperimentOutput run_experiment(const ExperimentSpec& spec_in) {
  ExperimentSpec spec = spec_in;
  if (spec.sweep.empty()) spec.sweep = default_sweep(spec.experiment, spec.params);
  validate(spec);
  for (double v : spec.sweep) (void)apply_sweep(spec.params, spec.experiment, v);

  struct Task {
    std::uint64_t seed;
    double value;
    std::string algo;
  };
  std::vector<Task> tasks;
  for (auto seed : spec.seeds)
    for (double v : spec.sweep)
      for (const auto& a : spec.algorithms) tasks.push_back({seed, v, a});

  const bool traces = spec.experiment == "convergence";
  std::vector<RunRecord> results(tasks.size());
  std::vector<std::string> trace_text(tasks.size());
  std::atomic<size_t> next{0};
  std::exception_ptr structural;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size() || failed) return;
      try {
        results[i] = run_one(spec, tasks[i].seed, tasks[i].algo, tasks[i].value, traces ? &trace_text[i] : nullptr);
      } catch (...) {
        if (!failed.exchange(true)) structural = std::current_exception();
        return;
      }
    }
  };
  const int nthreads = std::max(1, std::min<int>(thread_count(spec.threads), static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (structural) std::rethrow_exception(structural);

  // Single writer, task order.
  namespace fs = std::filesystem;
  fs::create_directories(spec.output_dir);
  const fs::path dir(spec.output_dir);
  const std::string param = sweep_param(spec.experiment);
  ExperimentOutput out;
  out.records = results;
  out.summary = summarize(results, spec.sweep);
  {
    std::ofstream raw(dir / "raw.csv");
    std::ofstream fail(dir / "failures.csv");
    if (!raw || !fail) throw std::runtime_error("cannot write into " + spec.output_dir);
    raw << kRawHeader << '\n';
    fail << "seed,algorithm,sweep_param,sweep_value,status,message\n";
    for (const auto& r : results) {
      const double dbm = r.ok() ? watts_to_dbm(r.objective_w) : kNaN;
      raw << r.seed << ',' << r.algorithm << ',' << param << ',' << num(r.sweep_value) << ',' << num(r.objective_w)
          << ',' << num(dbm) << ',' << num(r.harvested_w) << ',' << r.iterations << ',' << r.status << '\n';
      if (!r.ok()) {
        ++out.failures;
        fail << r.seed << ',' << r.algorithm << ',' << param << ',' << num(r.sweep_value) << ',' << r.status << ','
             << csv_text(r.message) << '\n';
      }
    }
  }
  {
    std::ofstream sum(dir / "summary.csv");
    sum << "algorithm,sweep_param,sweep_value,seeds,objective_w,objective_dbm,harvested_w,harvested_dbm\n";
    for (const auto& s : out.summary) {
      const double odbm = s.seeds > 0 ? watts_to_dbm(s.objective_w) : kNaN;
      const double hdbm = s.seeds > 0 && s.harvested_w > 0.0 ? watts_to_dbm(s.harvested_w) : kNaN;
      sum << s.algorithm << ',' << param << ',' << num(s.sweep_value) << ',' << s.seeds << ',' << num(s.objective_w)
          << ',' << num(odbm) << ',' << num(s.harvested_w) << ',' << num(hdbm) << '\n';
    }
  }
  if (traces) {
    for (size_t i = 0; i < tasks.size(); ++i) {
      if (trace_text[i].empty()) continue;
      std::ofstream t(dir / ("convergence_" + tasks[i].algo + "_seed" + std::to_string(tasks[i].seed) + ".csv"));
      t << trace_text[i];
    }
  }
  {
    std::ofstream gp(dir / "plot.gp");
    gp << gnuplot_script(spec);
  }
  return out;
}

}  // namespace swipt::experiment
