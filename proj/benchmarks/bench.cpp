#include <benchmark/benchmark.h>

#include "nlhorn/inequalities.hpp"
#include "nlhorn/lr.hpp"
#include "nlhorn/nl.hpp"
#include "nlhorn/verify.hpp"

using namespace nlhorn;

namespace {

void BM_LrCoefficientCold(benchmark::State& state) {
  const Partition mu({4, 3, 2, 1}), nu({4, 3, 2, 1}), la({6, 5, 4, 3, 2});
  for (auto _ : state) {
    lr_clear_caches();
    benchmark::DoNotOptimize(lr_coefficient(mu, nu, la));
  }
}
BENCHMARK(BM_LrCoefficientCold)->Unit(benchmark::kMicrosecond);

void BM_LrCoefficientWarm(benchmark::State& state) {
  const Partition mu({4, 3, 2, 1}), nu({4, 3, 2, 1}), la({6, 5, 4, 3, 2});
  lr_coefficient(mu, nu, la);
  for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(mu, nu, la));
}
BENCHMARK(BM_LrCoefficientWarm);

void BM_NewellLittlewoodCold(benchmark::State& state) {
  const Partition p({4, 3, 2});
  for (auto _ : state) {
    lr_clear_caches();
    benchmark::DoNotOptimize(newell_littlewood(p, p, p));
  }
}
BENCHMARK(BM_NewellLittlewoodCold)->Unit(benchmark::kMicrosecond);

void BM_EnumerateExtended(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_extended(n));
}
BENCHMARK(BM_EnumerateExtended)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ScanConjecture(benchmark::State& state) {
  const auto set = enumerate_extended(2);
  const long long max_size = state.range(0);
  for (auto _ : state) {
    lr_clear_caches();
    benchmark::DoNotOptimize(scan_conjecture(2, max_size, set));
  }
}
BENCHMARK(BM_ScanConjecture)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FilterRedundant(benchmark::State& state) {
  const auto set = enumerate_extended(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(filter_redundant(set));
}
BENCHMARK(BM_FilterRedundant)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
