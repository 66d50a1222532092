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

#include "swipt/scenario.hpp"

#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"
#include "swipt/rng.hpp"

namespace swipt::scenario {

using nlohmann::json;

namespace {

constexpr double kSpeedOfLight = 299792458.0;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json cvec_to_json(const CVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back({v(i).real(), v(i).imag()});
  return a;
}

CVec cvec_from_json(const json& a) {
  CVec v(static_cast<Eigen::Index>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = cd(a[i].at(0).get<double>(), a[i].at(1).get<double>());
  return v;
}

json cmat_to_json(const CMat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(cvec_to_json(m.row(r).transpose()));
  return rows;
}

CMat cmat_from_json(const json& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto c = n ? static_cast<Eigen::Index>(rows[0].size()) : 0;
  CMat m(n, c);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (static_cast<Eigen::Index>(rows[static_cast<size_t>(r)].size()) != c) throw StructuralError("ragged matrix");
    m.row(r) = cvec_from_json(rows[static_cast<size_t>(r)]).transpose();
  }
  return m;
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const json& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto c = n ? static_cast<Eigen::Index>(rows[0].size()) : 0;
  Mat m(n, c);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (static_cast<Eigen::Index>(rows[static_cast<size_t>(r)].size()) != c) throw StructuralError("ragged matrix");
    for (Eigen::Index k = 0; k < c; ++k) m(r, k) = rows[static_cast<size_t>(r)][static_cast<size_t>(k)].get<double>();
  }
  return m;
}

std::array<double, 2> rrh_position(int l, int num_rrh, double isd) {
  if (num_rrh == 1) return {0.0, 0.0};
  const double radius = isd / (2.0 * std::sin(std::numbers::pi / num_rrh));
  const double th = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * l / num_rrh;
  return {radius * std::cos(th), radius * std::sin(th)};
}

std::array<double, 2> disc_point(const CounterRng& rng, std::uint32_t purpose, std::uint32_t idx, double radius) {
  const auto u = rng.uniform2(purpose, idx, 0, 0);
  const double r = radius * std::sqrt(u[0]);
  const double th = 2.0 * std::numbers::pi * u[1];
  return {r * std::cos(th), r * std::sin(th)};
}

double dist(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

CVec build_channel(const CVec& fading, const std::vector<std::array<double, 2>>& sites, const std::array<double, 2>& rx,
                   int nt, const model::Geometry& geo) {
  CVec h(fading.size());
  for (size_t l = 0; l < sites.size(); ++l) {
    const double pg = path_gain(dist(sites[l], rx), geo.carrier_hz, geo.path_loss_exponent, geo.reference_distance_m);
    h.segment(static_cast<Eigen::Index>(l) * nt, nt) = std::sqrt(pg) * fading.segment(static_cast<Eigen::Index>(l) * nt, nt);
  }
  return h;
}

}  // namespace

EnergyProfile synthetic_profile() {
  EnergyProfile p;
  p.solar.resize(kSlotsPerDay);
  p.wind.resize(kSlotsPerDay);
  for (int t = 0; t < kSlotsPerDay; ++t) {
    const auto i = static_cast<size_t>(t);
    p.solar[i] = (t > 24 && t < 72) ? std::sin(std::numbers::pi * (t - 24) / 48.0) : 0.0;
    p.wind[i] = 0.6 + 0.3 * std::cos(2.0 * std::numbers::pi * t / kSlotsPerDay);
  }
  return p;
}

EnergyProfile load_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open energy profile " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("slot,solar,wind", 0) != 0)
    throw StructuralError("energy profile must start with header slot,solar,wind");
  EnergyProfile p;
  int expected = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ','))
      throw StructuralError("energy profile row needs three columns: " + line);
    if (std::stoi(a) != expected) throw StructuralError("energy profile slots must be 0..95 in order");
    const double s = std::stod(b), w = std::stod(c);
    if (s < 0.0 || s > 1.0 || w < 0.0 || w > 1.0) throw StructuralError("energy profile values must be in [0, 1]");
    p.solar.push_back(s);
    p.wind.push_back(w);
    ++expected;
  }
  if (expected != kSlotsPerDay) throw StructuralError("energy profile must have 96 slots");
  return p;
}

void save_profile_csv(const EnergyProfile& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write " + path);
  out << "slot,solar,wind\n";
  out.precision(10);
  for (size_t t = 0; t < p.solar.size(); ++t) out << t << ',' << p.solar[t] << ',' << p.wind[t] << '\n';
}

ParameterSet preset(const std::string& name) {
  ParameterSet p;
  p.name = name;
  if (name == "table3") return p;
  if (name == "desk" || name == "tiny") {
    p.noise_ir_dbm = -70.0;
    p.noise_er_dbm = -70.0;
    p.noise_s_dbm = -70.0;
    p.p_min_er_dbm = -65.0;
    if (name == "tiny") {
      p.num_rrh = 2;
      p.num_ir = 2;
      p.num_er = 1;
      p.antennas_per_rrh = 2;
      p.backhaul_max = 2.3;
    }
    return p;
  }
  throw StructuralError("unknown preset: " + name);
}

std::vector<std::string> preset_names() { return {"table3", "desk", "tiny"}; }

ParameterSet parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw StructuralError("config must be a JSON object");
  ParameterSet p = preset(j.value("preset", std::string("desk")));
  static const std::set<std::string> known = {
      "preset", "name", "num_rrh", "num_ir", "num_er", "antennas_per_rrh", "inter_site_distance_m",
      "service_radius_m", "carrier_hz", "path_loss_exponent", "reference_distance_m", "gamma_req_db",
      "gamma_tol_db", "noise_ir_dbm", "noise_er_dbm", "noise_s_dbm", "p_tx_max_dbm", "p_min_er_dbm",
      "p_c_cp_dbm", "p_c_rrh_dbm", "pa_efficiency", "harvest_efficiency", "backhaul_max", "sigma_est_sq",
      "energy_scale_w", "energy_mix", "harvest_slot", "grid_loss_fraction", "grid_loss", "profile_csv"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw StructuralError("config: unknown key '" + it.key() + "'");
  try {
#define SWIPT_GET(key)   if (j.contains(#key)) j.at(#key).get_to(p.key)
    SWIPT_GET(name);
    SWIPT_GET(num_rrh);
    SWIPT_GET(num_ir);
    SWIPT_GET(num_er);
    SWIPT_GET(antennas_per_rrh);
    SWIPT_GET(inter_site_distance_m);
    SWIPT_GET(service_radius_m);
    SWIPT_GET(carrier_hz);
    SWIPT_GET(path_loss_exponent);
    SWIPT_GET(reference_distance_m);
    SWIPT_GET(gamma_req_db);
    SWIPT_GET(gamma_tol_db);
    SWIPT_GET(noise_ir_dbm);
    SWIPT_GET(noise_er_dbm);
    SWIPT_GET(noise_s_dbm);
    SWIPT_GET(p_tx_max_dbm);
    SWIPT_GET(p_min_er_dbm);
    SWIPT_GET(p_c_cp_dbm);
    SWIPT_GET(p_c_rrh_dbm);
    SWIPT_GET(pa_efficiency);
    SWIPT_GET(harvest_efficiency);
    SWIPT_GET(backhaul_max);
    SWIPT_GET(sigma_est_sq);
    SWIPT_GET(energy_scale_w);
    SWIPT_GET(energy_mix);
    SWIPT_GET(harvest_slot);
    SWIPT_GET(grid_loss_fraction);
    SWIPT_GET(profile_csv);
#undef SWIPT_GET
    if (j.contains("grid_loss")) p.grid_loss = mat_from_json(j.at("grid_loss"));
  } catch (const json::exception& e) {
    throw StructuralError(std::string("config: ") + e.what());
  }
  if (p.num_rrh < 1 || p.num_ir < 1 || p.num_er < 0 || p.antennas_per_rrh < 1)
    throw StructuralError("config: dimensions must be positive");
  if (p.gamma_req_db.empty()) throw StructuralError("config: gamma_req_db is empty");
  if (p.energy_mix.empty()) throw StructuralError("config: energy_mix is empty");
  if (p.harvest_slot < 0 || p.harvest_slot >= kSlotsPerDay) throw StructuralError("config: harvest_slot out of range");
  return p;
}

ParameterSet load_config(const std::string& path) { return parse_config(read_file(path)); }

std::string config_to_json(const ParameterSet& p) {
  json j;
  j["name"] = p.name;
  j["num_rrh"] = p.num_rrh;
  j["num_ir"] = p.num_ir;
  j["num_er"] = p.num_er;
  j["antennas_per_rrh"] = p.antennas_per_rrh;
  j["inter_site_distance_m"] = p.inter_site_distance_m;
  j["service_radius_m"] = p.service_radius_m;
  j["carrier_hz"] = p.carrier_hz;
  j["path_loss_exponent"] = p.path_loss_exponent;
  j["reference_distance_m"] = p.reference_distance_m;
  j["gamma_req_db"] = p.gamma_req_db;
  j["gamma_tol_db"] = p.gamma_tol_db;
  j["noise_ir_dbm"] = p.noise_ir_dbm;
  j["noise_er_dbm"] = p.noise_er_dbm;
  j["noise_s_dbm"] = p.noise_s_dbm;
  j["p_tx_max_dbm"] = p.p_tx_max_dbm;
  j["p_min_er_dbm"] = p.p_min_er_dbm;
  j["p_c_cp_dbm"] = p.p_c_cp_dbm;
  j["p_c_rrh_dbm"] = p.p_c_rrh_dbm;
  j["pa_efficiency"] = p.pa_efficiency;
  j["harvest_efficiency"] = p.harvest_efficiency;
  j["backhaul_max"] = p.backhaul_max;
  j["sigma_est_sq"] = p.sigma_est_sq;
  j["energy_scale_w"] = p.energy_scale_w;
  j["energy_mix"] = p.energy_mix;
  j["harvest_slot"] = p.harvest_slot;
  j["grid_loss_fraction"] = p.grid_loss_fraction;
  if (p.grid_loss) j["grid_loss"] = mat_to_json(*p.grid_loss);
  j["profile_csv"] = p.profile_csv;
  return j.dump(2);
}

double path_gain(double distance_m, double carrier_hz, double exponent, double reference_m) {
  const double lambda = kSpeedOfLight / carrier_hz;
  const double fs = std::pow(lambda / (4.0 * std::numbers::pi * reference_m), 2.0);
  const double d = std::max(distance_m, reference_m);
  return fs * std::pow(d / reference_m, -exponent);
}

double harvest_at(const EnergyProfile& profile, const ParameterSet& p, int rrh, int slot) {
  if (slot < 0 || slot >= static_cast<int>(profile.solar.size())) throw StructuralError("harvest_at: slot out of range");
  const auto& mix = p.energy_mix[static_cast<size_t>(rrh) % p.energy_mix.size()];
  const auto s = static_cast<size_t>(slot);
  return p.energy_scale_w * (mix[0] * profile.solar[s] + mix[1] * profile.wind[s]);
}

Mat default_grid_loss(const Vec& e_ref, double fraction) {
  const Eigen::Index n = e_ref.size();
  Mat b = 0.9 * Mat::Identity(n, n) + Mat::Constant(n, n, 0.1);
  const double q = e_ref.dot(b * e_ref);
  if (q <= 0.0) return b;
  return b * (fraction * e_ref.sum() / q);
}

model::Scenario generate(const ParameterSet& p, std::uint64_t seed) {
  if (p.profile_csv.empty()) return generate(p, seed, synthetic_profile());
  return generate(p, seed, load_profile_csv(p.profile_csv));
}

model::Scenario generate(const ParameterSet& p, std::uint64_t seed, const EnergyProfile& profile) {
  model::Scenario sc;
  const int L = p.num_rrh, K = p.num_ir, M = p.num_er, nt = p.antennas_per_rrh;
  sc.num_rrh = L;
  sc.num_ir = K;
  sc.num_er = M;
  sc.antennas_per_rrh = nt;
  sc.seed = seed;
  const CounterRng rng(seed);

  model::Geometry geo;
  geo.carrier_hz = p.carrier_hz;
  geo.path_loss_exponent = p.path_loss_exponent;
  geo.reference_distance_m = p.reference_distance_m;
  for (int l = 0; l < L; ++l) geo.rrh.push_back(rrh_position(l, L, p.inter_site_distance_m));
  for (int k = 0; k < K; ++k) geo.ir.push_back(disc_point(rng, kPurposeIrPosition, static_cast<std::uint32_t>(k), p.service_radius_m));
  for (int m = 0; m < M; ++m) geo.er.push_back(disc_point(rng, kPurposeErPosition, static_cast<std::uint32_t>(m), p.service_radius_m));
  auto fading = [&](std::uint32_t purpose, int rx) {
    CVec f(L * nt);
    for (int l = 0; l < L; ++l)
      for (int a = 0; a < nt; ++a)
        f(l * nt + a) = rng.complex_normal(purpose, static_cast<std::uint32_t>(rx), static_cast<std::uint32_t>(l),
                                           static_cast<std::uint32_t>(a));
    return f;
  };
  for (int k = 0; k < K; ++k) {
    geo.ir_fading.push_back(fading(kPurposeIrFading, k));
    sc.h.push_back(build_channel(geo.ir_fading.back(), geo.rrh, geo.ir[static_cast<size_t>(k)], nt, geo));
  }
  for (int m = 0; m < M; ++m) {
    geo.er_fading.push_back(fading(kPurposeErFading, m));
    sc.g_hat.push_back(build_channel(geo.er_fading.back(), geo.rrh, geo.er[static_cast<size_t>(m)], nt, geo));
    sc.xi.push_back(CMat::Identity(L * nt, L * nt));
    sc.eps.push_back(0.0);
    sc.p_min_er.push_back(dbm_to_watts(p.p_min_er_dbm));
  }
  sc.geometry = geo;

  for (int k = 0; k < K; ++k)
    sc.gamma_req.push_back(db_to_linear(p.gamma_req_db[static_cast<size_t>(k) % p.gamma_req_db.size()]));
  sc.gamma_tol = db_to_linear(p.gamma_tol_db);
  sc.sigma_ir_sq = dbm_to_watts(p.noise_ir_dbm);
  sc.sigma_er_sq = dbm_to_watts(p.noise_er_dbm);
  sc.sigma_s_sq = dbm_to_watts(p.noise_s_dbm);
  sc.backhaul_max.assign(static_cast<size_t>(L), p.backhaul_max);
  sc.p_tx_max.assign(static_cast<size_t>(L), dbm_to_watts(p.p_tx_max_dbm));
  sc.p_c_cp = dbm_to_watts(p.p_c_cp_dbm);
  sc.p_c_rrh.assign(static_cast<size_t>(L), dbm_to_watts(p.p_c_rrh_dbm));
  sc.pa_inefficiency = 1.0 / p.pa_efficiency;
  sc.harvest_efficiency = p.harvest_efficiency;

  sc.e_max = Vec(L + 1);
  for (int l = 0; l < L; ++l) sc.e_max(l) = harvest_at(profile, p, l, p.harvest_slot);
  // The CP's own supply only covers its circuit power.
  sc.e_max(L) = sc.p_c_cp;
  if (p.grid_loss) {
    sc.grid_loss = *p.grid_loss;
  } else {
    Vec ref = Vec::Constant(L + 1, p.energy_scale_w);
    ref(L) = sc.p_c_cp;
    sc.grid_loss = default_grid_loss(ref, p.grid_loss_fraction);
  }
  sc = apply_csi_error(sc, p.sigma_est_sq);
  sc.validate();
  return sc;
}

model::Scenario apply_csi_error(const model::Scenario& sc, double sigma_est_sq) {
  if (sigma_est_sq < 0.0) throw StructuralError("apply_csi_error: negative variance");
  model::Scenario out = sc;
  const int n = sc.num_tx();
  for (size_t m = 0; m < out.g_hat.size(); ++m) {
    out.eps[m] = std::sqrt(sigma_est_sq) * out.g_hat[m].norm();
    out.xi[m] = CMat::Identity(n, n);
  }
  return out;
}

model::Scenario colocated(const model::Scenario& sc, double sigma_est_sq) {
  if (!sc.geometry) throw StructuralError("colocated: scenario has no geometry");
  const auto& g = *sc.geometry;
  model::Scenario out = sc;
  const int L = sc.num_rrh, nt = sc.antennas_per_rrh;
  std::array<double, 2> centroid{0.0, 0.0};
  for (const auto& r : g.rrh) {
    centroid[0] += r[0] / L;
    centroid[1] += r[1] / L;
  }
  model::Geometry ng = g;
  ng.rrh = {centroid};
  out.num_rrh = 1;
  out.antennas_per_rrh = L * nt;
  for (size_t k = 0; k < sc.h.size(); ++k) out.h[k] = build_channel(g.ir_fading[k], ng.rrh, g.ir[k], L * nt, ng);
  for (size_t m = 0; m < sc.g_hat.size(); ++m) out.g_hat[m] = build_channel(g.er_fading[m], ng.rrh, g.er[m], L * nt, ng);
  out.geometry = ng;
  double ptx = 0.0, pc = 0.0, emax = 0.0;
  for (int l = 0; l < L; ++l) {
    ptx += sc.p_tx_max[static_cast<size_t>(l)];
    pc += sc.p_c_rrh[static_cast<size_t>(l)];
    emax += sc.e_max(l);
  }
  out.p_tx_max = {ptx};
  out.p_c_rrh = {pc};
  out.backhaul_max = {std::numeric_limits<double>::infinity()};
  out.e_max = Vec(2);
  out.e_max << emax, sc.e_max(L);
  Vec ref(2);
  ref << emax, sc.e_max(L);
  out.grid_loss = default_grid_loss(ref, 0.05);
  return apply_csi_error(out, sigma_est_sq);
}

std::string snapshot_json(const model::Scenario& sc) {
  json j;
  j["seed"] = sc.seed;
  j["num_rrh"] = sc.num_rrh;
  j["num_ir"] = sc.num_ir;
  j["num_er"] = sc.num_er;
  j["antennas_per_rrh"] = sc.antennas_per_rrh;
  j["h"] = json::array();
  for (const auto& v : sc.h) j["h"].push_back(cvec_to_json(v));
  j["g_hat"] = json::array();
  for (const auto& v : sc.g_hat) j["g_hat"].push_back(cvec_to_json(v));
  j["xi"] = json::array();
  for (const auto& x : sc.xi) j["xi"].push_back(cmat_to_json(x));
  j["eps"] = sc.eps;
  j["gamma_req"] = sc.gamma_req;
  j["gamma_tol"] = sc.gamma_tol;
  j["gamma_tol_er"] = sc.gamma_tol_er;
  j["sigma_ir_sq"] = sc.sigma_ir_sq;
  j["sigma_er_sq"] = sc.sigma_er_sq;
  j["sigma_s_sq"] = sc.sigma_s_sq;
  j["backhaul_max"] = sc.backhaul_max;
  j["p_tx_max"] = sc.p_tx_max;
  j["p_min_er"] = sc.p_min_er;
  j["e_max"] = std::vector<double>(sc.e_max.data(), sc.e_max.data() + sc.e_max.size());
  j["grid_loss"] = mat_to_json(sc.grid_loss);
  j["p_c_cp"] = sc.p_c_cp;
  j["p_c_rrh"] = sc.p_c_rrh;
  j["pa_inefficiency"] = sc.pa_inefficiency;
  j["harvest_efficiency"] = sc.harvest_efficiency;
  if (sc.geometry) {
    const auto& g = *sc.geometry;
    json gj;
    gj["rrh"] = g.rrh;
    gj["ir"] = g.ir;
    gj["er"] = g.er;
    gj["carrier_hz"] = g.carrier_hz;
    gj["path_loss_exponent"] = g.path_loss_exponent;
    gj["reference_distance_m"] = g.reference_distance_m;
    gj["ir_fading"] = json::array();
    for (const auto& v : g.ir_fading) gj["ir_fading"].push_back(cvec_to_json(v));
    gj["er_fading"] = json::array();
    for (const auto& v : g.er_fading) gj["er_fading"].push_back(cvec_to_json(v));
    j["geometry"] = gj;
  }
  return j.dump(1);
}

model::Scenario load_snapshot(const std::string& json_text) {
  model::Scenario sc;
  try {
    const json j = json::parse(json_text);
    sc.seed = j.at("seed").get<std::uint64_t>();
    sc.num_rrh = j.at("num_rrh").get<int>();
    sc.num_ir = j.at("num_ir").get<int>();
    sc.num_er = j.at("num_er").get<int>();
    sc.antennas_per_rrh = j.at("antennas_per_rrh").get<int>();
    for (const auto& v : j.at("h")) sc.h.push_back(cvec_from_json(v));
    for (const auto& v : j.at("g_hat")) sc.g_hat.push_back(cvec_from_json(v));
    for (const auto& x : j.at("xi")) sc.xi.push_back(cmat_from_json(x));
    j.at("eps").get_to(sc.eps);
    j.at("gamma_req").get_to(sc.gamma_req);
    j.at("gamma_tol").get_to(sc.gamma_tol);
    j.at("gamma_tol_er").get_to(sc.gamma_tol_er);
    j.at("sigma_ir_sq").get_to(sc.sigma_ir_sq);
    j.at("sigma_er_sq").get_to(sc.sigma_er_sq);
    j.at("sigma_s_sq").get_to(sc.sigma_s_sq);
    j.at("backhaul_max").get_to(sc.backhaul_max);
    j.at("p_tx_max").get_to(sc.p_tx_max);
    j.at("p_min_er").get_to(sc.p_min_er);
    const auto em = j.at("e_max").get<std::vector<double>>();
    sc.e_max = Eigen::Map<const Vec>(em.data(), static_cast<Eigen::Index>(em.size()));
    sc.grid_loss = mat_from_json(j.at("grid_loss"));
    j.at("p_c_cp").get_to(sc.p_c_cp);
    j.at("p_c_rrh").get_to(sc.p_c_rrh);
    j.at("pa_inefficiency").get_to(sc.pa_inefficiency);
    j.at("harvest_efficiency").get_to(sc.harvest_efficiency);
    if (j.contains("geometry")) {
      const auto& gj = j.at("geometry");
      model::Geometry g;
      gj.at("rrh").get_to(g.rrh);
      gj.at("ir").get_to(g.ir);
      gj.at("er").get_to(g.er);
      gj.at("carrier_hz").get_to(g.carrier_hz);
      gj.at("path_loss_exponent").get_to(g.path_loss_exponent);
      gj.at("reference_distance_m").get_to(g.reference_distance_m);
      for (const auto& v : gj.at("ir_fading")) g.ir_fading.push_back(cvec_from_json(v));
      for (const auto& v : gj.at("er_fading")) g.er_fading.push_back(cvec_from_json(v));
      sc.geometry = g;
    }
  } catch (const json::exception& e) {
    throw StructuralError(std::string("snapshot: ") + e.what());
  }
  sc.validate();
  return sc;
}

}  // namespace swipt::scenario
