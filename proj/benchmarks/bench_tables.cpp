#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "w1/generator.hpp"
#include "w1/normalize.hpp"
#include "w1/tables.hpp"
#include "w1/verifier.hpp"

namespace {

void BM_BuildTables(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto normalized = w1::normalize(w1::path_cover_instance(n));
  for (auto _ : state) {
    auto tables = w1::build_tables(normalized);
    benchmark::DoNotOptimize(tables);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_BuildTables)->Arg(10)->Arg(50)->Arg(100)->Arg(500)->Complexity();

// Per-candidate check on the path family. The lookup counters should not
// move with n; wall time may drift a little with cache effects.
void BM_CheckCandidate(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto tables = w1::build_tables(w1::normalize(w1::path_cover_instance(n)));
  std::mt19937_64 rng(n);
  std::vector<w1::Assignment> sample;
  for (int i = 0; i < 1024; ++i) {
    auto a = static_cast<w1::VarId>(w1::draw(rng, 0, n - 1));
    auto b = static_cast<w1::VarId>(w1::draw(rng, 0, n - 2));
    if (b >= a) ++b;
    sample.push_back(w1::Assignment({{a, 1}, {b, 1}}));
  }
  std::size_t i = 0;
  std::uint64_t d = 0, l = 0;
  for (auto _ : state) {
    const auto check = w1::check_candidate(sample[i++ & 1023], tables);
    d = check.stats.d_lookups;
    l = check.stats.l_lookups;
    benchmark::DoNotOptimize(check);
  }
  state.counters["d_lookups"] = static_cast<double>(d);
  state.counters["l_lookups"] = static_cast<double>(l);
}
BENCHMARK(BM_CheckCandidate)->Arg(10)->Arg(50)->Arg(100)->Arg(500);

void BM_SolveRandom(benchmark::State& state) {
  w1::GeneratorConfig g;
  g.variables = static_cast<unsigned>(state.range(0));
  g.constraints = g.variables;
  g.k = 2;
  g.plant = true;
  const auto inst = w1::random_instance(g);
  for (auto _ : state) {
    auto r = w1::solve(inst);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SolveRandom)->Arg(6)->Arg(12)->Arg(24);

}  // namespace
