#include <benchmark/benchmark.h>

#include <limits>

#include "polyzeta/monte_carlo.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/series.hpp"
#include "polyzeta/special_functions.hpp"

using namespace polyzeta;

static void BM_integrate_1d(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const QuadConfig cfg{1e-10, 1e-10, 2000};
  for (auto _ : state) {
    auto r = integrate_1d([a](double t) { return density(Dist::xi, a, t); },
                          0.0, std::numeric_limits<double>::infinity(), cfg);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_integrate_1d)->Arg(2)->Arg(3)->Arg(6);

static void BM_evaluate_series(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = evaluate_series({k, 3}, 1e-10);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_evaluate_series)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

static void BM_cdf(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdf(Dist::xi, a, t));
    t = (t < 10.0) ? t * 1.01 : 0.1;
  }
}
BENCHMARK(BM_cdf)->Arg(2)->Arg(5)->Arg(8);

static void BM_sample_xi(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  std::uint64_t c = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_xi(a, counter_uniform(1, 0, c++)));
  }
}
BENCHMARK(BM_sample_xi)->Arg(2)->Arg(4);

static void BM_estimate_S(benchmark::State& state) {
  McConfig cfg{5, state.range(0), 8, 1};
  for (auto _ : state) {
    auto e = estimate_S({3, 3}, cfg);
    benchmark::DoNotOptimize(e.mean);
  }
}
BENCHMARK(BM_estimate_S)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_assemble_formula(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const QuadConfig cfg{1e-6, 1e-6, 2000};
  for (auto _ : state) {
    auto b = assemble_formula({k, 3}, cfg);
    benchmark::DoNotOptimize(b.assembled_S);
  }
}
BENCHMARK(BM_assemble_formula)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
