#include <benchmark/benchmark.h>

#include "syntonet/scale.hpp"
#include "syntonet/syntony.hpp"

using namespace syntonet;

static void BM_PairSyntony(benchmark::State& state) {
  const auto x = build_spectrum(kC1Frequency, {1.0, kDefaultAlpha});
  const auto y = build_spectrum(kC1Frequency * 1.5, {1.0, kDefaultAlpha});
  for (auto _ : state) benchmark::DoNotOptimize(pair_syntony(x, y, {}));
}
BENCHMARK(BM_PairSyntony);

static void BM_SyntonyMatrices(benchmark::State& state) {
  const auto scale =
      build_scale(temperament_table(TemperamentName::Equal), kC1Frequency, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_syntony_matrices(scale, {1.0056, kDefaultAlpha}, {}));
}
BENCHMARK(BM_SyntonyMatrices)->Arg(3)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_Threshold(benchmark::State& state) {
  const auto scale = build_scale(temperament_table(TemperamentName::Just), kC1Frequency, kDefaultOctaves);
  const auto m = build_syntony_matrix(scale, {1.0, kDefaultAlpha}, {}, SyntonyKind::Consonance);
  for (auto _ : state) benchmark::DoNotOptimize(largest_component(threshold_graph(m, 560)));
}
BENCHMARK(BM_Threshold);
