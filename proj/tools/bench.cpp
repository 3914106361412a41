#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <utility>

#include "w1/generator.hpp"
#include "w1/normalize.hpp"
#include "w1/tables.hpp"
#include "w1/verifier.hpp"

namespace w1tools {

int run_bench(const BenchArgs& args, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  std::set<std::pair<std::uint64_t, std::uint64_t>> all_costs;
  out << "# path family, k = 2: size build_ms check_ns d_lookups l_lookups nodes\n";
  for (unsigned n : args.sizes) {
    const auto inst = w1::path_cover_instance(n);
    const auto normalized = w1::normalize(inst);

    double build_ms = 0;
    std::optional<w1::VerificationTables> tables;
    for (unsigned r = 0; r < std::max(1u, args.repeats); ++r) {
      const auto t0 = Clock::now();
      tables = w1::build_tables(normalized);
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      build_ms = r == 0 ? ms : std::min(build_ms, ms);
    }

    std::mt19937_64 rng(n);
    std::vector<w1::Assignment> sample;
    for (std::size_t i = 0; i < args.sample; ++i) {
      auto a = static_cast<w1::VarId>(w1::draw(rng, 0, n - 1));
      auto b = static_cast<w1::VarId>(w1::draw(rng, 0, n - 2));
      if (b >= a) ++b;
      sample.push_back(w1::Assignment({{a, 1}, {b, 1}}));
    }

    std::set<std::pair<std::uint64_t, std::uint64_t>> costs;
    std::uint64_t nodes = 0;
    const auto t0 = Clock::now();
    for (const auto& b : sample) {
      const auto check = w1::check_candidate(b, *tables);
      costs.insert({check.stats.d_lookups, check.stats.l_lookups});
      nodes += check.stats.nodes_touched;
    }
    const double check_ns =
        std::chrono::duration<double, std::nano>(Clock::now() - t0).count() / static_cast<double>(sample.size());
    all_costs.insert(costs.begin(), costs.end());

    char line[160];
    for (const auto& [d, l] : costs) {
      std::snprintf(line, sizeof line, "%u %.3f %.1f %llu %llu %.2f\n", n, build_ms, check_ns,
                    static_cast<unsigned long long>(d), static_cast<unsigned long long>(l),
                    static_cast<double>(nodes) / static_cast<double>(sample.size()));
      out << line;
    }
  }
  const bool constant = all_costs.size() == 1;
  out << "lookups constant across sizes: " << (constant ? "yes" : "no") << '\n';
  return constant ? 0 : 1;
}

}  // namespace w1tools
