// SPDX-License-Identifier: Apache-2.0
//
// ristile: analysis toolkit for two-tile RIS-assisted 2x2 MIMO links
// Copyright (C) 2026 The ristile authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Microbenchmarks for the hot paths: the closed-form 2x2 SVD that every
// Monte Carlo trial runs twice, the Mellin-Barnes Meijer G evaluator behind
// every outage closed form, and the per-channel alternating optimizer.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "ristile/altopt.hpp"
#include "ristile/analytic.hpp"
#include "ristile/complex2.hpp"
#include "ristile/montecarlo.hpp"
#include "ristile/rng.hpp"
#include "ristile/sampling.hpp"
#include "ristile/specfun.hpp"

namespace {

using namespace ristile;

std::vector<ChannelRealization> channels(std::size_t n) {
  std::vector<ChannelRealization> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    CounterRng rng({7, 0}, t);
    out.push_back(sample_channel(rng));
  }
  return out;
}

void BM_Philox(benchmark::State& state) {
  PhiloxCounter ctr{0, 0, 0, 0};
  for (auto _ : state) {
    ctr = philox4x32_10(ctr, {0x1234, 0x5678});
    benchmark::DoNotOptimize(ctr);
  }
}
BENCHMARK(BM_Philox);

void BM_Svd2(benchmark::State& state) {
  const auto chs = channels(256);
  std::size_t i = 0;
  for (auto _ : state) {
    Svd2 s = svd2(chs[i++ & 255].h);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Svd2);

void BM_SampleChannel(benchmark::State& state) {
  std::uint64_t t = 0;
  for (auto _ : state) {
    CounterRng rng({7, 0}, t++);
    ChannelRealization ch = sample_channel(rng);
    benchmark::DoNotOptimize(ch);
  }
}
BENCHMARK(BM_SampleChannel);

// G^{3,0}_{1,3}(z | 0; -1, -a, -2) across the range the outage formulas hit.
void BM_MeijerG(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(calG(z, 0.5));
}
BENCHMARK(BM_MeijerG)->Arg(1)->Arg(10)->Arg(100);

void BM_OutageClosedForm(benchmark::State& state) {
  const Mode m{1, 1, state.range(0) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(outage_closed_form({m, 0.3}));
}
BENCHMARK(BM_OutageClosedForm)->ArgName("cmp")->Arg(0)->Arg(1);

void BM_OutageQuadrature(benchmark::State& state) {
  const Mode m{1, 1, state.range(0) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(outage_quadrature({m, 0.3}));
}
BENCHMARK(BM_OutageQuadrature)->ArgName("cmp")->Arg(0)->Arg(1);

void BM_OptimizeJoint(benchmark::State& state) {
  const auto chs = channels(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_joint(chs[i++ & 255], 10.0));
}
BENCHMARK(BM_OptimizeJoint);

void BM_SampleGains(benchmark::State& state) {
  const auto schemes = all_schemes();
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  McOptions opt;
  opt.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sample_gains(schemes, trials, 1, opt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleGains)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
