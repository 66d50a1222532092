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

// Batch experiment runner.
// Exit codes: 0 success, 2 when any run failed (infeasible or unverified), 1 on structural error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "swipt/experiment.hpp"

namespace {

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoull(text)};
    const std::uint64_t a = std::stoull(text.substr(0, dots));
    const std::uint64_t b = std::stoull(text.substr(dots + 2));
    if (b < a) throw swipt::StructuralError("seed range must be increasing: " + text);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = a; s <= b; ++s) out.push_back(s);
    return out;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const swipt::StructuralError*>(&e)) throw;
    throw swipt::StructuralError("bad seed range: " + text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  namespace ex = swipt::experiment;
  CLI::App app{"Robust secure SWIPT resource allocation simulator"};
  std::string config, preset = "desk", experiment = "convergence", seeds = "1..3", out = "out";
  std::vector<std::string> algos;
  std::vector<double> sweep;
  double kappa = -1.0, phi = -1.0;
  int max_iter = -1, threads = 0;
  bool list = false;
  app.add_option("--config", config, "JSON parameter file (overrides --preset)");
  app.add_option("--preset", preset, "built-in parameter set: desk, tiny or table3")->capture_default_str();
  app.add_option("--experiment", experiment, "experiment name")->capture_default_str();
  app.add_option("--seeds", seeds, "seed or inclusive range a..b")->capture_default_str();
  app.add_option("--out", out, "output directory")->capture_default_str();
  app.add_option("--algo", algos, "algorithms (comma separated)")->delimiter(',');
  app.add_option("--sweep", sweep, "sweep values (comma separated)")->delimiter(',');
  app.add_option("--kappa", kappa, "GBD relative gap tolerance");
  app.add_option("--phi", phi, "SCA penalty factor");
  app.add_option("--max-iter", max_iter, "iteration cap for GBD and SCA");
  app.add_option("--threads", threads, "worker threads (default SWIPT_NUM_THREADS or 1)");
  app.add_flag("--list", list, "list experiments and algorithms");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (list) {
    std::cout << "experiments:";
    for (const auto& n : ex::experiment_names()) std::cout << ' ' << n;
    std::cout << "\nalgorithms:";
    for (const auto& n : ex::algorithm_names()) std::cout << ' ' << n;
    std::cout << '\n';
    return 0;
  }
  try {
    ex::ExperimentSpec spec;
    spec.params = config.empty() ? swipt::scenario::preset(preset) : swipt::scenario::load_config(config);
    spec.experiment = experiment;
    spec.seeds = parse_seeds(seeds);
    spec.output_dir = out;
    spec.sweep = sweep;
    spec.threads = threads;
    if (!algos.empty()) spec.algorithms = algos;
    if (kappa >= 0.0) spec.gbd.kappa = kappa;
    if (phi > 0.0) spec.sca.phi = phi;
    if (max_iter > 0) {
      spec.gbd.max_iter = max_iter;
      spec.sca.max_iter = max_iter;
    }
    const auto result = ex::run_experiment(spec);
    for (const auto& s : result.summary)
      std::cout << s.algorithm << " @ " << s.sweep_value << ": " << s.seeds << " seeds, mean power "
                << swipt::watts_to_dbm(s.objective_w) << " dBm\n";
    if (result.failures > 0) {
      std::cerr << result.failures << " run(s) failed; see " << out << "/failures.csv\n";
      return 2;
    }
    return 0;
  } catch (const swipt::StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
