// Copyright 2026 The DSBM Change Point Authors.
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

#include "dsbm/bench/scenario.hpp"
#include "dsbm/cluster/kmeans.hpp"
#include "dsbm/cluster/segment.hpp"
#include "dsbm/cluster/spectral.hpp"
#include "dsbm/cpd/criterion.hpp"
#include "dsbm/cpd/estimators.hpp"
#include "dsbm/netcore/sampler.hpp"

namespace {

dsbm::DsbmSpec connectivity(int m, int n) {
  dsbm::ScenarioSpec s;
  s.name = "II";
  s.m = m;
  s.n = n;
  return dsbm::build_scenario(s);
}

void BM_SampleSeries(benchmark::State& state) {
  const auto spec = connectivity(static_cast<int>(state.range(0)), 60);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto series = dsbm::sample_dsbm(spec, ++seed);
    benchmark::DoNotOptimize(series);
  }
  state.SetItemsProcessed(state.iterations() * 60 * state.range(0) * (state.range(0) - 1) / 2);
}
BENCHMARK(BM_SampleSeries)->Arg(60)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

// Full edgewise scan over 1..n-1; prefix sums make each point O(m^2).
void BM_EdgewiseScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const auto series = dsbm::sample_dsbm(connectivity(static_cast<int>(state.range(0)), n), 1);
  const auto grid = dsbm::SearchGrid::full(n);
  for (auto _ : state) {
    auto scan = dsbm::er_criterion_scan(series, grid);
    benchmark::DoNotOptimize(scan);
  }
}
BENCHMARK(BM_EdgewiseScan)->Args({60, 60})->Args({500, 20})->Args({100, 400});

void BM_SpectralEmbed(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto series = dsbm::sample_dsbm(connectivity(m, 20), 2);
  const Eigen::MatrixXd op =
      dsbm::segment_operator(series, 1, 10, dsbm::ClusterVariant::kAdjacencySum);
  for (auto _ : state) {
    auto e = dsbm::spectral_embed(op, 2);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_SpectralEmbed)->Arg(60)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_KMeans(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto series = dsbm::sample_dsbm(connectivity(m, 20), 3);
  const auto e = dsbm::spectral_embed(
      dsbm::segment_operator(series, 1, 10, dsbm::ClusterVariant::kAdjacencySum), 2);
  for (auto _ : state) {
    auto r = dsbm::kmeans(e.rows, 2, 7);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_KMeans)->Arg(60)->Arg(500);

void BM_TwoStep(benchmark::State& state) {
  const auto series = dsbm::sample_dsbm(connectivity(60, 60), 4);
  const auto grid = dsbm::SearchGrid::full(60);
  for (auto _ : state) {
    auto fit = dsbm::estimate_2step(series, 2, grid, 1);
    benchmark::DoNotOptimize(fit);
  }
}
BENCHMARK(BM_TwoStep)->Unit(benchmark::kMillisecond);

void BM_EveryTimePoint(benchmark::State& state) {
  const auto series = dsbm::sample_dsbm(connectivity(60, 60), 4);
  const auto grid = dsbm::SearchGrid::full(60);
  for (auto _ : state) {
    auto fit = dsbm::estimate_every_time_point(series, 2, grid, 1);
    benchmark::DoNotOptimize(fit);
  }
}
BENCHMARK(BM_EveryTimePoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
