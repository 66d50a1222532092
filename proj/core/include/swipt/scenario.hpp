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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swipt/model.hpp"

namespace swipt::scenario {

constexpr int kSlotsPerDay = 96;

// Normalized daily harvesting curves in [0, 1], one value per 15-minute slot.
struct EnergyProfile {
  std::vector<double> solar;
  std::vector<double> wind;
};

// Solar bell over slots 24..72 and a cosine wind curve between 0.3 and 0.9.
EnergyProfile synthetic_profile();
// CSV with header "slot,solar,wind" and 96 rows.
EnergyProfile load_profile_csv(const std::string& path);
void save_profile_csv(const EnergyProfile& p, const std::string& path);

// User-facing parameters. dB / dBm only here; the generated Scenario is linear.
struct ParameterSet {
  std::string name = "desk";
  int num_rrh = 3;
  int num_ir = 3;
  int num_er = 2;
  int antennas_per_rrh = 2;
  double inter_site_distance_m = 150.0;
  double service_radius_m = 150.0;
  double carrier_hz = 915e6;
  double path_loss_exponent = 2.7;
  double reference_distance_m = 1.0;
  std::vector<double> gamma_req_db{6.0, 9.0, 12.0, 15.0, 18.0};  // assigned cyclically
  double gamma_tol_db = 0.0;
  double noise_ir_dbm = -23.0;
  double noise_er_dbm = -23.0;
  double noise_s_dbm = -23.0;
  double p_tx_max_dbm = 48.0;
  double p_min_er_dbm = -10.0;
  double p_c_cp_dbm = 40.0;
  double p_c_rrh_dbm = 30.0;
  double pa_efficiency = 0.38;
  double harvest_efficiency = 0.5;
  double backhaul_max = 10.0;  // bits/s/Hz per RRH
  double sigma_est_sq = 0.05;
  double energy_scale_w = 500.0;
  std::vector<std::array<double, 2>> energy_mix{{0.5, 0.5}, {0.9, 0.1}, {0.1, 0.9}};  // (solar, wind), cyclic
  int harvest_slot = 48;
  double grid_loss_fraction = 0.05;
  std::optional<Mat> grid_loss;  // overrides the default loss matrix
  std::string profile_csv;       // empty = synthetic profile
};

// "table3": the published parameter table; "desk": scaled noise and harvesting
// targets so instances are feasible; "tiny": L=2, K=2, M=1, Nt=2 test size.
ParameterSet preset(const std::string& name);
std::vector<std::string> preset_names();

// JSON object; "preset" selects the base, every other key overrides it.
ParameterSet parse_config(const std::string& json_text);
ParameterSet load_config(const std::string& path);
std::string config_to_json(const ParameterSet& p);

// Free-space gain at the reference distance times (d / d0)^-eta, d >= d0.
double path_gain(double distance_m, double carrier_hz, double exponent, double reference_m);

// Available energy of RRH l (0-based) at a slot: scale * (a * solar + b * wind).
double harvest_at(const EnergyProfile& profile, const ParameterSet& p, int rrh, int slot);

// b0 (I + 0.1 (1 1^T - I)) scaled so e_ref^T B e_ref = fraction * sum(e_ref).
Mat default_grid_loss(const Vec& e_ref, double fraction);

// Positions, fading and estimated channels for one seed. Deterministic in
// (parameters, seed); receivers and antennas draw from fixed counters so
// growing Nt keeps the existing entries.
model::Scenario generate(const ParameterSet& p, std::uint64_t seed, const EnergyProfile& profile);
model::Scenario generate(const ParameterSet& p, std::uint64_t seed);

// eps_m^2 = sigma_est_sq * ||g_hat_m||^2, xi_m = I.
model::Scenario apply_csi_error(const model::Scenario& sc, double sigma_est_sq);

// Rebuilds channels with all antennas at the RRH centroid (single site).
model::Scenario colocated(const model::Scenario& sc, double sigma_est_sq);

std::string snapshot_json(const model::Scenario& sc);
model::Scenario load_snapshot(const std::string& json_text);

}  // namespace swipt::scenario
