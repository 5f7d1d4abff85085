#include <benchmark/benchmark.h>

#include <random>

#include "steer/functionals.hpp"
#include "steer/optimizer.hpp"
#include "steer/presets.hpp"
#include "steer/quantum.hpp"
#include "steer/scan.hpp"

using namespace steer;

namespace {

DirectionSet random_set(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<UnitVector3> dirs;
  for (int i = 0; i < n; ++i) dirs.push_back(UnitVector3::normalized(Vec3(g(rng), g(rng), g(rng))));
  return DirectionSet(std::move(dirs));
}

void BM_LhsBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SteeringFunctional f(Family::Chained, n);
  const auto b = random_set(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(lhs_bound(f, b).value);
}
BENCHMARK(BM_LhsBound)->DenseRange(4, 20, 4);

void BM_LhsBoundGray(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SteeringFunctional f(Family::Chained, n);
  const auto m = alice_group_vectors(f, random_set(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(lhs_bound_value(m));
}
BENCHMARK(BM_LhsBoundGray)->DenseRange(4, 20, 4);

void BM_QuantumValue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SteeringFunctional f(Family::Chained, n);
  const auto b = random_set(n, 2);
  const auto rho = make_generalized_werner(1.0, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(quantum_value(f, b, rho).value);
}
BENCHMARK(BM_QuantumValue)->Arg(4)->Arg(10);

void BM_Evaluate(benchmark::State& state) {
  const SteeringFunctional f(Family::Chained, 10);
  const auto b = presets::optimized_n10();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(f, b, StateFamily::werner()).visibility);
}
BENCHMARK(BM_Evaluate);

void BM_OptimizerRestart(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  OptimizerConfig cfg;
  cfg.restarts = 1;
  cfg.threads = 1;
  const SteeringFunctional f(Family::Chained, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(optimize_directions(f, StateFamily::werner(), cfg).report.visibility);
}
BENCHMARK(BM_OptimizerRestart)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Threshold(benchmark::State& state) {
  const SteeringFunctional f(Family::Chained, 6);
  const auto b = presets::optimized_n6();
  for (auto _ : state) benchmark::DoNotOptimize(threshold_angles(f, b).lo);
}
BENCHMARK(BM_Threshold)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
