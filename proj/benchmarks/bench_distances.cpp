// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <polsar/distances.hpp>
#include <polsar/scenes.hpp>
#include <polsar/special.hpp>

using namespace polsar;

namespace {

PreparedWishart prepared(const char* name) {
  return PreparedWishart::prepare({preset(name).sigma, 900, 4.0});
}

void BM_Prepare(benchmark::State& state) {
  const CovarianceEstimate e{preset("Caatinga").sigma, 900, 4.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(PreparedWishart::prepare(e));
  }
}
BENCHMARK(BM_Prepare);

void BM_Statistic(benchmark::State& state) {
  const StatisticKind kind = kWishartKinds[static_cast<std::size_t>(state.range(0))];
  const PreparedWishart a = prepared("River");
  const PreparedWishart b = prepared("Caatinga");
  for (auto _ : state) {
    benchmark::DoNotOptimize(stat_between(kind, a, b));
  }
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_Statistic)->DenseRange(0, 4);

void BM_GaussianStatistic(benchmark::State& state) {
  GaussianEstimate a, b;
  a.covariance = RealMatrix(3);
  b.covariance = RealMatrix(3);
  for (int i = 0; i < 3; ++i) {
    a.mean.push_back(0.1 * (i + 1));
    b.mean.push_back(0.1 * (i + 1) + 0.01);
    a.covariance(i, i) = 1e-3 * (i + 1);
    b.covariance(i, i) = 1.1e-3 * (i + 1);
  }
  a.sample_size = 900;
  b.sample_size = 900;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stat_gaussian_bhattacharyya(a, b));
  }
}
BENCHMARK(BM_GaussianStatistic);

void BM_Chi2Sf(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x += 0.001;
    if (x > 40.0) x = 0.001;
    benchmark::DoNotOptimize(chi2_sf(x, 9));
  }
}
BENCHMARK(BM_Chi2Sf);

}  // namespace

BENCHMARK_MAIN();
