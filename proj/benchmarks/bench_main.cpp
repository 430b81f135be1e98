#include <benchmark/benchmark.h>

#include <algorithm>

#include "motivic/artin.hpp"
#include "motivic/finset.hpp"
#include "motivic/hypercube.hpp"
#include "motivic/resolution.hpp"

using namespace motivic;

static void BM_CanonicalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::size_t> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = (i * i + 1) % 3;
  const FinDiagram d = FinDiagram::from_values({n, 3, 2}, {values, {0, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 9, 2);

static void BM_Census(benchmark::State& state) {
  const auto b = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagrams(3, {b, b, b}));
}
BENCHMARK(BM_Census)->DenseRange(2, 4);

static void BM_SolveComonoid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = artin_comonoid(FinSet(n));
  for (auto _ : state) benchmark::DoNotOptimize(solve_coalgebra_morphisms(c, c));
}
BENCHMARK(BM_SolveComonoid)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_Equalizer(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equalizer(FinSet(n), FinSet(n), 2));
}
BENCHMARK(BM_Equalizer)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Hocolim(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  Cover c{6, {}};
  for (std::size_t i = 0; i < k; ++i) c.components.push_back({i, (i + 1) % 6, (i + 3) % 6});
  for (auto& comp : c.components) std::sort(comp.begin(), comp.end());
  const CubeDiagram cube = cover_model(c);
  for (auto _ : state) benchmark::DoNotOptimize(homology_dims(punctured_cube_hocolim(cube)));
}
BENCHMARK(BM_Hocolim)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
