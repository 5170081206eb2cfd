#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "pflc/causal/fate.hpp"
#include "pflc/discrete/xi.hpp"
#include "pflc/mixed/xi_mixed.hpp"

using namespace pflc;

static void BM_ProbOmegaIs(benchmark::State& state) {
  const auto ex = testing::reproductive_example();
  for (auto _ : state) benchmark::DoNotOptimize(discrete::prob_omega_is(ex.model, ex.normal));
}
BENCHMARK(BM_ProbOmegaIs);

static void BM_XiDist(benchmark::State& state) {
  const auto ex = testing::reproductive_example();
  for (auto _ : state) benchmark::DoNotOptimize(discrete::xi_dist(ex.model, ex.late));
}
BENCHMARK(BM_XiDist);

static void BM_TNorm(benchmark::State& state) {
  const auto t = testing::catalogue()[state.range(0)];
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> xs(1024);
  for (double& x : xs) x = u(rng);
  for (auto _ : state) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) acc += t(xs[i], xs[i + 1]);
    benchmark::DoNotOptimize(acc);
  }
  state.SetLabel(t.label());
}
BENCHMARK(BM_TNorm)->DenseRange(0, 5);

static void BM_AczelAlsina(benchmark::State& state) {
  const auto t = fuzzy::TNorm::aczel_alsina(2.5);
  double a = 0.3;
  for (auto _ : state) {
    a = 0.25 + 0.5 * t(a, 0.7);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_AczelAlsina);

static void BM_XiMixed(benchmark::State& state) {
  const auto fx = mixed::MixedDist::from_density(mixed::Density::normal(0.5, 0.2));
  const auto sel = mixed::SelectionField::identity_on_unit();
  for (auto _ : state) benchmark::DoNotOptimize(mixed::expect_xi_mixed(fx, sel, 0.0));
}
BENCHMARK(BM_XiMixed);

static void BM_AssignTreatments(benchmark::State& state) {
  const auto space = testing::dose_space();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(causal::assign_treatments(space, n, 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AssignTreatments)->Arg(10000)->Arg(100000);
BENCHMARK_MAIN();
