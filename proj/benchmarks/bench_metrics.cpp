#include <benchmark/benchmark.h>

#include "syntonet/graphmodels.hpp"
#include "syntonet/metrics.hpp"
#include "syntonet/projection.hpp"
#include "syntonet/syntony.hpp"

using namespace syntonet;

namespace {
Graph er_sample(std::uint64_t seed) {
  auto spec = fit_to_degree(ModelKind::ER, 108, kDefaultMeanDegree, seed);
  return largest_component(generate(spec)).graph;
}
}  // namespace

static void BM_FeatureVector(benchmark::State& state) {
  const auto g = er_sample(1);
  for (auto _ : state) benchmark::DoNotOptimize(feature_vector(g));
}
BENCHMARK(BM_FeatureVector)->Unit(benchmark::kMillisecond);

static void BM_Symmetry(benchmark::State& state) {
  const auto g = er_sample(2);
  for (auto _ : state) benchmark::DoNotOptimize(concentric_symmetry_levels(g, 4, SymmetryVariant::Merged));
}
BENCHMARK(BM_Symmetry)->Unit(benchmark::kMillisecond);

static void BM_GenerateModel(benchmark::State& state) {
  const auto kind = static_cast<ModelKind>(state.range(0));
  auto spec = fit_to_degree(kind, 108, kDefaultMeanDegree, 3);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    spec.seed = ++seed;
    benchmark::DoNotOptimize(generate(spec));
  }
}
BENCHMARK(BM_GenerateModel)->DenseRange(0, 4);

static void BM_FitPca(benchmark::State& state) {
  std::vector<FeatureVector> rows;
  for (std::uint64_t s = 0; s < 60; ++s) rows.push_back(feature_vector(er_sample(s + 10)));
  for (auto _ : state) benchmark::DoNotOptimize(fit_pca(rows));
}
BENCHMARK(BM_FitPca)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
