// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "flippath/flip_graph.hpp"
#include "flippath/instances.hpp"

using namespace flippath;

namespace {

PointSet input(const benchmark::State& state) { return random_general(static_cast<int>(state.range(0)), 11); }

void BM_EnumerateSerial(benchmark::State& state) {
  const auto ps = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_plane_paths_serial(ps));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto ps = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_plane_paths(ps));
}

void BM_BuildSerial(benchmark::State& state) {
  const auto ps = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(build_serial(ps));
}

void BM_BuildParallel(benchmark::State& state) {
  const auto ps = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(build(ps));
}

void BM_DiameterSerial(benchmark::State& state) {
  const auto g = build(input(state));
  state.counters["vertices"] = g.vertex_count();
  for (auto _ : state) benchmark::DoNotOptimize(diameter_serial(g));
}

void BM_DiameterParallel(benchmark::State& state) {
  const auto g = build(input(state));
  state.counters["vertices"] = g.vertex_count();
  for (auto _ : state) benchmark::DoNotOptimize(diameter(g));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiameterSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiameterParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
