#include <benchmark/benchmark.h>
#include <omp.h>

#include "harmsum/quad.hpp"
#include "harmsum/verify.hpp"

using namespace harmsum;

namespace {

void quad_args(benchmark::internal::Benchmark* b) {
  for (int d : {30, 60, 120}) b->Arg(d);
}

void BM_TanhSinhSerial(benchmark::State& state) {
  const auto ctx = PrecisionContext::for_digits(static_cast<int>(state.range(0)));
  const IntegrandSpec spec = catalog_integrand("split_total", ctx);
  for (auto _ : state) benchmark::DoNotOptimize(tanh_sinh_serial(spec, ctx).value);
}
BENCHMARK(BM_TanhSinhSerial)->Apply(quad_args)->Unit(benchmark::kMillisecond);

void BM_TanhSinhParallel(benchmark::State& state) {
  const auto ctx = PrecisionContext::for_digits(static_cast<int>(state.range(0)));
  const IntegrandSpec spec = catalog_integrand("split_total", ctx);
  for (auto _ : state) benchmark::DoNotOptimize(tanh_sinh(spec, ctx).value);
}
BENCHMARK(BM_TanhSinhParallel)->Apply(quad_args)->Unit(benchmark::kMillisecond);

void BM_VerifyAllSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_all_serial(30, "").passed);
}
BENCHMARK(BM_VerifyAllSerial)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_VerifyAllParallel(benchmark::State& state) {
  const int workers = omp_get_max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(30, "", workers).passed);
  state.counters["workers"] = workers;
}
BENCHMARK(BM_VerifyAllParallel)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
