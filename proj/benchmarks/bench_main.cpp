#include <benchmark/benchmark.h>

#include <cmath>

#include "maxlab/dunkl_heat.hpp"
#include "maxlab/dunkl_kernel.hpp"
#include "maxlab/dunkl_transform.hpp"
#include "maxlab/maximal.hpp"
#include "maxlab/rng.hpp"

using namespace maxlab;

namespace {

GridFunction bench_gaussian(const WeightedGrid& g) {
  GridFunction f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.node_coord(j, 0);
    f[j] = std::exp(-0.5 * x * x);
  }
  return f;
}

void KernelSeries(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(dunkl_kernel_series(0.5, {z, 0.0}));
}
BENCHMARK(KernelSeries)->Arg(2)->Arg(10)->Arg(25);

void KernelScaled(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_kernel_scaled(0.5, z));
}
BENCHMARK(KernelScaled)->Arg(25)->Arg(400)->Arg(40000);

void KernelImaginary(benchmark::State& state) {
  const double s = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_kernel_imag(0.5, s));
}
BENCHMARK(KernelImaginary)->Arg(4)->Arg(50)->Arg(400);

void MarkovExponentialApply(benchmark::State& state) {
  Rng rng(1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MarkovGenerator q = MarkovGenerator::random_symmetric(rng, n);
  std::vector<double> f(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(markov_apply(q, 3.0, f));
}
BENCHMARK(MarkovExponentialApply)->Arg(4)->Arg(8)->Arg(16);

void HeatTableBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightedGrid grid(RootSystem::rank1(0.5), 8.0, n);
  const GridFunction f = bench_gaussian(grid);
  for (auto _ : state) {
    const DunklHeatSemigroup heat(grid);
    benchmark::DoNotOptimize(heat.apply(0.25, f));  // transient table + apply
  }
  state.SetComplexityN(n);
}
BENCHMARK(HeatTableBuild)->Arg(128)->Arg(256)->Arg(512)->Complexity(benchmark::oNSquared);

void HeatApplyCached(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightedGrid grid(RootSystem::rank1(0.5), 8.0, n);
  const DunklHeatSemigroup heat(grid, {0.25});
  heat.prepare();
  const GridFunction f = bench_gaussian(grid);
  for (auto _ : state) benchmark::DoNotOptimize(heat.apply(0.25, f));
}
BENCHMARK(HeatApplyCached)->Arg(256)->Arg(512)->Arg(1024);

void TransformForward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightedGrid grid(RootSystem::rank1(0.5), 10.0, n);
  const SpectralGrid sgrid = SpectralGrid::mirror(grid);
  const DunklTransformer transformer(grid, sgrid);
  const GridFunction f = bench_gaussian(grid);
  for (auto _ : state) benchmark::DoNotOptimize(transformer.forward(f));
}
BENCHMARK(TransformForward)->Arg(256)->Arg(512)->Arg(1024);

void HardyLittlewood(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightedGrid grid(RootSystem::trivial(1), 8.0, n);
  const GridFunction f = bench_gaussian(grid);
  const SupGrid rsup = SupGrid::geometric(SupGrid::Kind::radius, 0.05, 4.0, 1.02, true);
  for (auto _ : state) benchmark::DoNotOptimize(hardy_littlewood(grid, f, rsup));
}
BENCHMARK(HardyLittlewood)->Arg(1024)->Arg(4096);

void VectorMaximalFinite(benchmark::State& state) {
  Rng rng(2);
  const MarkovSemigroup s(MarkovGenerator::random_symmetric(rng, 8));
  VectorField f;
  for (int c = 0; c < 8; ++c) {
    GridFunction fc(8);
    for (auto& v : fc) v = rng.uniform();
    f.push_back(fc);
  }
  const SupGrid sup = SupGrid::geometric(SupGrid::Kind::time, 1.0 / 64, 256.0, 1.35, true);
  for (auto _ : state) benchmark::DoNotOptimize(vector_semigroup_maximal(s, f, sup, 2.0));
}
BENCHMARK(VectorMaximalFinite);

}  // namespace

BENCHMARK_MAIN();
