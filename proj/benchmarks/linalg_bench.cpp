#include <random>

#include <benchmark/benchmark.h>

#include "syz/rational_matrix.hpp"

namespace {

syz::RationalMatrix random_sparse(std::size_t n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(-9, 9);
  std::vector<syz::Triplet> t;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (coin(rng) < density) t.push_back({r, c, syz::Rational(value(rng))});
    }
  }
  return syz::RationalMatrix::from_triplets(n, n, std::move(t));
}

void BM_SparseRank(benchmark::State& state) {
  const auto m = random_sparse(static_cast<std::size_t>(state.range(0)), 0.05, 1);
  for (auto _ : state) benchmark::DoNotOptimize(syz::rank(m));
}
BENCHMARK(BM_SparseRank)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
