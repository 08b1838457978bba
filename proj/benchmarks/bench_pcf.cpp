#include <benchmark/benchmark.h>

#include "pcf/asymptotics.hpp"
#include "pcf/gamma.hpp"
#include "pcf/weber_e.hpp"
#include "pcf/weber_uv.hpp"

using pcf::Complex;

static void BM_LogGamma(benchmark::State& state) {
  Complex z(3.2, 1.7);
  for (auto _ : state) benchmark::DoNotOptimize(pcf::log_gamma(z));
}
BENCHMARK(BM_LogGamma);

static void BM_WeberU(benchmark::State& state) {
  pcf::EvalConfig cfg;
  Complex a(0.3, 0.2), z(1.5, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(pcf::weber_u(a, z, cfg));
}
BENCHMARK(BM_WeberU);

static void BM_WeberU_FinitePart(benchmark::State& state) {
  pcf::EvalConfig cfg;
  Complex a(-1.6, 0.0), z(1.5, 0.0); // finite-part route
  for (auto _ : state) benchmark::DoNotOptimize(pcf::weber_u(a, z, cfg));
}
BENCHMARK(BM_WeberU_FinitePart);

static void BM_WeberV(benchmark::State& state) {
  pcf::EvalConfig cfg;
  Complex a(0.3, 0.0), z(2.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(pcf::weber_v(a, z, cfg));
}
BENCHMARK(BM_WeberV);

static void BM_EPlus(benchmark::State& state) {
  pcf::EvalConfig cfg;
  Complex a(0.4, 0.1), x(1.7, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(pcf::e_plus(a, x, cfg));
}
BENCHMARK(BM_EPlus);

static void BM_AsymU(benchmark::State& state) {
  Complex a(0.3, 0.0), z(10.0, 0.0);
  int s = pcf::optimal_truncation(a, z);
  for (auto _ : state) benchmark::DoNotOptimize(pcf::asym_u(a, z, s));
}
BENCHMARK(BM_AsymU);

BENCHMARK_MAIN();
