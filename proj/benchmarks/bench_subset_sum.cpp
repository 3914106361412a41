#include <benchmark/benchmark.h>

#include <random>

#include "w1/combinatorics.hpp"
#include "w1/generator.hpp"
#include "w1/subset_sum.hpp"
#include "w1/subset_sum_program.hpp"

namespace {

w1::SubsetSumInstance sample(std::size_t n, unsigned k) {
  std::mt19937_64 rng(n * 31 + k);
  return w1::random_subset_sum(n, k, w1::saturating_pow(n, k), true, rng);
}

void BM_SubsetSumDigits(benchmark::State& state) {
  const auto inst = sample(static_cast<std::size_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) {
    auto r = w1::solve(inst);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SubsetSumDigits)->Args({10, 2})->Args({20, 2})->Args({20, 3})->Args({40, 3});

void BM_SubsetSumNram(benchmark::State& state) {
  const auto inst = sample(static_cast<std::size_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) {
    auto r = w1::nram::run_subset_sum_program(inst, w1::nram::GuessStrategy::exhaustive());
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SubsetSumNram)->Args({8, 2})->Args({12, 2})->Args({12, 3});

}  // namespace
