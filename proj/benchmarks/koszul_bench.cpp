#include <benchmark/benchmark.h>

#include "syz/fixtures.hpp"
#include "syz/koszul.hpp"

namespace {

void BM_BettiRationalNormalCurve(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto m = syz::rational_normal_curve(d, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(syz::betti_table(m, static_cast<std::size_t>(d), 0, 2));
  }
}
BENCHMARK(BM_BettiRationalNormalCurve)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_BettiThreads(benchmark::State& state) {
  const auto m = syz::rational_normal_curve(7, 3);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(syz::betti_table(m, 7, 0, 2, threads));
}
BENCHMARK(BM_BettiThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CheckNpVeronese(benchmark::State& state) {
  const auto m = syz::veronese(2, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(syz::check_np(m, 2, 3));
}
BENCHMARK(BM_CheckNpVeronese)->Unit(benchmark::kMillisecond);

}  // namespace
