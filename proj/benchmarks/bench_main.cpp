// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "pfcurv/curvature.hpp"
#include "pfcurv/dec.hpp"
#include "pfcurv/meshgen.hpp"

namespace {

using namespace pfcurv;

void BM_MetricIcosphere(benchmark::State& state) {
  const MeshData mesh = icosphere_mesh(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(make_metric_complex(mesh));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(mesh.cells.size()));
}
BENCHMARK(BM_MetricIcosphere)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MetricGrid3(benchmark::State& state) {
  const MeshData mesh = flat_grid_mesh(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(make_metric_complex(mesh));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(mesh.cells.size()));
}
BENCHMARK(BM_MetricGrid3)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CurvatureReport(benchmark::State& state) {
  const MetricComplex m = perturb_lengths(gen_flat_grid(3, static_cast<int>(state.range(0))), 0.05, 7);
  for (auto _ : state) benchmark::DoNotOptimize(compute_curvature_report(m));
}
BENCHMARK(BM_CurvatureReport)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Hodge(benchmark::State& state) {
  const MetricComplex m = gen_icosphere(static_cast<int>(state.range(0)), 1.0);
  Cochain w = zero_cochain(m, Lattice::simplicial, 1);
  for (std::size_t i = 0; i < w.values.size(); ++i) w.values[i] = static_cast<double>(i % 7) - 3.0;
  for (auto _ : state) benchmark::DoNotOptimize(hodge(m, w));
}
BENCHMARK(BM_Hodge)->Arg(3)->Arg(5);

void BM_Perturb(benchmark::State& state) {
  const MetricComplex m = gen_flat_grid(3, static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(perturb_lengths(m, 0.05, seed++));
}
BENCHMARK(BM_Perturb)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
