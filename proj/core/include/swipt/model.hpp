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

#include "swipt/common.hpp"

namespace swipt::model {

// Positions and small-scale fading kept so channels can be rebuilt for a
// different antenna placement (the colocated baseline).
struct Geometry {
  std::vector<std::array<double, 2>> rrh;  // L
  std::vector<std::array<double, 2>> ir;   // K
  std::vector<std::array<double, 2>> er;   // M
  double carrier_hz = 915e6;
  double path_loss_exponent = 2.7;
  double reference_distance_m = 1.0;
  std::vector<CVec> ir_fading;  // K entries of length L * Nt, CN(0, 1)
  std::vector<CVec> er_fading;  // M entries of length L * Nt
};

// One snapshot of the network. Linear units throughout: watts, linear SINR.
struct Scenario {
  int num_rrh = 0;       // L
  int num_ir = 0;        // K
  int num_er = 0;        // M
  int antennas_per_rrh = 0;  // Nt
  std::vector<CVec> h;       // IR channels, length L * Nt, stacked per RRH
  std::vector<CVec> g_hat;   // ER channel estimates
  std::vector<CMat> xi;      // ER uncertainty shapes, PD
  std::vector<double> eps;   // ER uncertainty radii
  std::vector<double> gamma_req;  // per IR
  double gamma_tol = 1.0;
  std::vector<double> gamma_tol_er;  // optional per-ER override, empty = use gamma_tol
  double sigma_ir_sq = 0.0;
  double sigma_er_sq = 0.0;
  double sigma_s_sq = 0.0;   // ER noise used in the eavesdropping constraint
  std::vector<double> backhaul_max;  // per RRH, bits/s/Hz
  std::vector<double> p_tx_max;      // per RRH, W
  std::vector<double> p_min_er;      // per ER, W
  Vec e_max;                         // L + 1, last is the CP
  Mat grid_loss;                     // (L+1) x (L+1), PD
  double p_c_cp = 0.0;
  std::vector<double> p_c_rrh;
  double pa_inefficiency = 1.0;      // rho = 1 / PA efficiency
  double harvest_efficiency = 0.5;   // mu
  std::uint64_t seed = 0;
  std::optional<Geometry> geometry;

  int num_tx() const { return num_rrh * antennas_per_rrh; }
  double tol_for_er(int m) const {
    return gamma_tol_er.empty() ? gamma_tol : gamma_tol_er[static_cast<size_t>(m)];
  }
  // Antenna indicator of RRH l: R_l = diag(0, .., I_Nt, .., 0).
  CMat rrh_indicator(int l) const;
  // Secrecy rate of every IR, used as its backhaul demand.
  std::vector<double> backhaul_rates() const;
  // Throws StructuralError on inconsistent dimensions or non-PD matrices.
  void validate() const;
};

// RRH-to-IR assignment s_{l,k}, row-major over l.
struct Selection {
  int num_rrh = 0;
  int num_ir = 0;
  std::vector<int> bits;

  Selection() = default;
  Selection(int l, int k, int fill = 0) : num_rrh(l), num_ir(k), bits(static_cast<size_t>(l * k), fill) {}
  static Selection all_ones(int l, int k) { return Selection(l, k, 1); }
  static Selection from_bitstring(int l, int k, const std::string& s);
  int& at(int l, int k) { return bits[static_cast<size_t>(l * num_ir + k)]; }
  int at(int l, int k) const { return bits[static_cast<size_t>(l * num_ir + k)]; }
  int size() const { return num_rrh * num_ir; }
  int count() const;
  std::string bitstring() const;
  bool operator==(const Selection& o) const = default;
  bool operator<(const Selection& o) const { return bits < o.bits; }
};

struct Policy {
  std::vector<CMat> w;  // K beamforming matrices, N x N
  CMat v;               // artificial noise covariance
  Vec e_s;              // energy supplied per source, L + 1
  Selection s;
  double objective() const;  // sum_k Tr(W_k) + Tr(V)
};

double sinr_ir(const Policy& p, const Scenario& sc, int k);
// max(0, log2(1 + gamma_req) - log2(1 + gamma_tol))
double secrecy_rate(double gamma_req, double gamma_tol);
// mu * g^H (sum_k W_k + V) g
double harvested_power(const Policy& p, const CVec& g, double mu);
// SINR of IR k's signal at an ER with channel g and noise sigma_s_sq.
double er_sinr(const Policy& p, const CVec& g, int k, double sigma_s_sq);
// e^T B e; B must be PD.
double grid_loss(const Vec& e_s, const Mat& b);
// sum_k s_{l,k} R_B,k with s taken from the beam energy on RRH l.
double backhaul_consumption(const Policy& p, const Scenario& sc, int l, double zero_tol = 1e-9);
// Total consumption at the CP: circuit plus per-RRH circuit and PA draw.
double power_consumption(const Policy& p, const Scenario& sc);

struct ConstraintSlack {
  std::string name;   // e.g. "sinr_ir[1]", "tx_power[0]"
  double slack = 0.0; // >= 0 when satisfied, in the constraint's own units
  double scale = 1.0; // reference magnitude for relative checks
};

struct ConstraintReport {
  std::vector<ConstraintSlack> entries;
  double tol = 0.0;
  bool satisfied() const;
  const ConstraintSlack* worst() const;  // smallest slack / scale
  std::string summary() const;
};

// How the energy constraints are accounted: pooled at the CP with grid loss,
// each site on its own budget, or not at all.
enum class EnergyAccounting { pooled, per_rrh, none };

// Everything except the robust eavesdropping and harvesting constraints.
// Relative tolerance per entry: slack >= -tol * scale.
ConstraintReport check_deterministic(const Policy& p, const Scenario& sc, double tol = 1e-6,
                                     EnergyAccounting energy = EnergyAccounting::pooled);

}  // namespace swipt::model
