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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swipt/conic/rank_one.hpp"
#include "swipt/gbd.hpp"
#include "swipt/model.hpp"
#include "swipt/sca.hpp"
#include "swipt/scenario.hpp"

namespace swipt::experiment {

struct BaselineResult {
  double objective = 0.0;
  model::Policy policy;
  std::vector<CVec> beams;
  conic::RecoveryReport recovery;
  model::Scenario scenario;  // the instance actually solved
};

// All RRHs serve all IRs and the backhaul cap is dropped.
BaselineResult baseline_full_cooperation(const model::Scenario& sc, const conic::SolverOptions& opt = {});
// Full cooperation where each RRH runs on its own harvest: no grid transfer.
BaselineResult baseline_no_energy_share(const model::Scenario& sc, const conic::SolverOptions& opt = {});
// One site at the RRH centroid carrying all antennas, unbounded transmit
// power, unlimited energy and no backhaul.
BaselineResult baseline_colocated(const model::Scenario& sc, double sigma_est_sq, const conic::SolverOptions& opt = {});

// Sum over ERs of the power harvested with the estimated channels.
double harvested_total(const model::Policy& p, const model::Scenario& sc);

// Raw CSV header, one row per (seed, algorithm, sweep point).
inline constexpr const char* kRawHeader =
    "seed,algorithm,sweep_param,sweep_value,objective_w,objective_dbm,harvested_total_w,iterations,status";

const std::vector<std::string>& experiment_names();
const std::vector<std::string>& algorithm_names();

struct ExperimentSpec {
  std::string experiment = "power_vs_csi_error";
  scenario::ParameterSet params = scenario::preset("tiny");
  std::vector<double> sweep;  // empty selects the experiment default
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::vector<std::string> algorithms{"gbd", "sca", "full_coop"};
  std::string output_dir = "out";
  gbd::GbdOptions gbd;
  sca::ScaOptions sca;
  int threads = 0;  // <= 0 reads SWIPT_NUM_THREADS, default 1
};

// Throws StructuralError for unknown names, empty seeds or nonpositive sweep
// values (a zero CSI error is allowed).
void validate(const ExperimentSpec& spec);
// Name of the swept quantity and its default values.
std::string sweep_param(const std::string& experiment);
std::vector<double> default_sweep(const std::string& experiment, const scenario::ParameterSet& p);
// Parameters of one sweep point.
scenario::ParameterSet apply_sweep(const scenario::ParameterSet& p, const std::string& experiment, double value);

struct RunRecord {
  std::uint64_t seed = 0;
  std::string algorithm;
  double sweep_value = 0.0;
  double objective_w = 0.0;
  double harvested_w = 0.0;
  int iterations = 0;
  std::string status;   // optimal, iteration_limit, repeated_pattern, converged, infeasible, unverified, error
  std::string message;
  bool ok() const;
};

// Solves one (seed, algorithm, sweep point). Every returned policy is checked
// against the deterministic and robust constraints; a failed check yields
// status "unverified". trace_csv receives the GBD or SCA trace when non-null.
RunRecord run_one(const ExperimentSpec& spec, std::uint64_t seed, const std::string& algorithm, double sweep_value,
                  std::string* trace_csv = nullptr);

struct SummaryRow {
  std::string algorithm;
  double sweep_value = 0.0;
  int seeds = 0;  // seeds that succeeded at every sweep point of this algorithm
  double objective_w = 0.0;
  double harvested_w = 0.0;
};

// Averages linear watts over matched seeds per (algorithm, sweep value).
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records, const std::vector<double>& sweep);

struct ExperimentOutput {
  std::vector<RunRecord> records;
  std::vector<SummaryRow> summary;
  int failures = 0;
};

// Runs every task on a thread pool and writes raw.csv, summary.csv,
// failures.csv, plot.gp and, for the convergence experiment, one trace CSV
// per seed and algorithm into output_dir.
ExperimentOutput run_experiment(const ExperimentSpec& spec);

}  // namespace swipt::experiment
