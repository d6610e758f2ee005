#include <benchmark/benchmark.h>

#include "planar5/catalog.hpp"
#include "planar5/discharge.hpp"
#include "planar5/instances.hpp"
#include "planar5/matcher.hpp"
#include "planar5/reducer.hpp"

namespace {

planar5::EmbeddedGraph shaped(int n) {
  planar5::GenSpec spec;
  spec.seed = 1;
  spec.n = n;
  spec.flips = 2 * n;
  spec.min_degree_5 = true;
  return planar5::generate(spec);
}

void BM_Color(benchmark::State& state) {
  const auto g = shaped(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(planar5::color_planar(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Color)->RangeMultiplier(2)->Range(250, 4000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_FindReducible(benchmark::State& state) {
  const auto g = shaped(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(planar5::find_reducible(g.view()));
}
BENCHMARK(BM_FindReducible)->Arg(1000)->Arg(4000);

void BM_Audit(benchmark::State& state) {
  const auto g = shaped(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(planar5::audit(g.view(), true));
}
BENCHMARK(BM_Audit)->Arg(1000)->Arg(4000);

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(shaped(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Generate)->Arg(1000);

void BM_ValidateCatalog(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& e : planar5::builtin_catalog()) benchmark::DoNotOptimize(planar5::validate_entry(e));
  }
}
BENCHMARK(BM_ValidateCatalog)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
