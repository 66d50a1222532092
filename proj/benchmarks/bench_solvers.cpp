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

#include <benchmark/benchmark.h>

#include "swipt/conic/primal.hpp"
#include "swipt/gbd.hpp"
#include "swipt/robust.hpp"
#include "swipt/scenario.hpp"

using namespace swipt;

namespace {

void BM_PrimalTiny(benchmark::State& state) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 1);
  const auto ones = model::Selection::all_ones(sc.num_rrh, sc.num_ir);
  for (auto _ : state) benchmark::DoNotOptimize(conic::solve_primal(sc, ones).objective);
}
BENCHMARK(BM_PrimalTiny)->Unit(benchmark::kMillisecond);

void BM_PrimalDesk(benchmark::State& state) {
  const auto sc = scenario::generate(scenario::preset("desk"), 1);
  const auto ones = model::Selection::all_ones(sc.num_rrh, sc.num_ir);
  for (auto _ : state) benchmark::DoNotOptimize(conic::solve_primal(sc, ones).objective);
}
BENCHMARK(BM_PrimalDesk)->Unit(benchmark::kMillisecond);

void BM_GbdTiny(benchmark::State& state) {
  const auto sc = scenario::generate(scenario::preset("tiny"), 2);
  for (auto _ : state) benchmark::DoNotOptimize(gbd::run_gbd(sc).objective);
}
BENCHMARK(BM_GbdTiny)->Unit(benchmark::kMillisecond);

// Master problem over random cuts; arg is L * K (enumeration up to 20, then branch and bound).
void BM_Master(benchmark::State& state) {
  const int lk = static_cast<int>(state.range(0));
  const int l = 3, k = lk / l;
  const CounterRng rng(7);
  std::vector<gbd::Cut> cuts;
  for (int c = 0; c < 12; ++c) {
    gbd::Cut cut;
    cut.kind = c % 4 == 3 ? gbd::CutKind::feasibility : gbd::CutKind::optimality;
    cut.coeff = Mat(l, k);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < k; ++j)
        cut.coeff(i, j) = rng.normal2(kPurposeTest, static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(i),
                                      static_cast<std::uint32_t>(j))[0];
    cut.constant = cut.kind == gbd::CutKind::optimality ? 5.0 : -1.0;
    cuts.push_back(cut);
  }
  const std::vector<double> rates(static_cast<size_t>(k), 1.0);
  const std::vector<double> caps(static_cast<size_t>(l), 0.75 * k);
  for (auto _ : state) benchmark::DoNotOptimize(gbd::solve_master(cuts, l, k, rates, caps).mu);
}
BENCHMARK(BM_Master)->Arg(9)->Arg(15)->Arg(24)->Unit(benchmark::kMicrosecond);

void BM_WorstCaseQuadratic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CounterRng rng(3);
  CMat f(n, n);
  CVec g(n);
  for (int i = 0; i < n; ++i) {
    g(i) = rng.complex_normal(kPurposeTest, 0, 0, static_cast<std::uint32_t>(i));
    for (int j = 0; j < n; ++j) f(i, j) = rng.complex_normal(kPurposeTest, 1, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  }
  const CMat a = f - f.adjoint() * 0.5 + (f - f.adjoint() * 0.5).adjoint();
  const CMat xi = CMat::Identity(n, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(robust::worst_case_quadratic(a, g, xi, 0.3, robust::Sense::maximize).value);
}
BENCHMARK(BM_WorstCaseQuadratic)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
