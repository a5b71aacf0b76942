// Serial reference kernels against their OpenMP versions.
#include "fekete/kernels.hpp"
#include "fekete/minimize.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <span>
#include <vector>

namespace {

std::vector<double> chebyshev(int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) x[static_cast<std::size_t>(k)] = -0.99 * std::cos((2 * k + 1) * M_PI / (2 * n));
  return x;
}

template <class Fn>
void run(benchmark::State& state, Fn fn) {
  const auto x = chebyshev(static_cast<int>(state.range(0)));
  const std::span<const double> xs(x);
  for (auto _ : state) benchmark::DoNotOptimize(fn(xs));
  state.SetComplexityN(state.range(0));
}

void BM_LogDistance_Serial(benchmark::State& s) {
  run(s, [](auto xs) { return fekete::kernels::serial::pairwise_log_distance_sum(xs); });
}
void BM_LogDistance_Parallel(benchmark::State& s) {
  run(s, [](auto xs) { return fekete::kernels::parallel::pairwise_log_distance_sum(xs); });
}
void BM_Gradient_Serial(benchmark::State& s) {
  run(s, [](auto xs) { return fekete::kernels::serial::potential_gradient(xs, 0.7, 1.3); });
}
void BM_Gradient_Parallel(benchmark::State& s) {
  run(s, [](auto xs) { return fekete::kernels::parallel::potential_gradient(xs, 0.7, 1.3); });
}
void BM_Hessian_Serial(benchmark::State& s) {
  run(s, [](auto xs) { return fekete::kernels::serial::potential_hessian(xs, 0.7, 1.3); });
}
void BM_Hessian_Parallel(benchmark::State& s) {
  run(s, [](auto xs) { return fekete::kernels::parallel::potential_hessian(xs, 0.7, 1.3); });
}
void BM_MinimizePotential(benchmark::State& s) {
  const int n = static_cast<int>(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(fekete::minimize_potential<double>(n, 0.7, 1.3));
}

}  // namespace

BENCHMARK(BM_LogDistance_Serial)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(BM_LogDistance_Parallel)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(BM_Gradient_Serial)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(BM_Gradient_Parallel)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(BM_Hessian_Serial)->RangeMultiplier(4)->Range(64, 1024)->Complexity();
BENCHMARK(BM_Hessian_Parallel)->RangeMultiplier(4)->Range(64, 1024)->Complexity();
BENCHMARK(BM_MinimizePotential)->Arg(20)->Arg(100)->Arg(300);

BENCHMARK_MAIN();
