#include "w1/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "w1/combinatorics.hpp"
#include "w1/error.hpp"
#include "w1/generator.hpp"
#include "w1/hitting_set.hpp"
#include "w1/normalize.hpp"
#include "w1/nram.hpp"
#include "w1/poset.hpp"
#include "w1/subset_sum.hpp"
#include "w1/subset_sum_program.hpp"
#include "w1/tables.hpp"
#include "w1/verifier.hpp"
#include "w1/weighted_csp.hpp"

namespace w1 {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t scaled(const SelftestConfig& c, std::size_t n) {
  return std::max<std::size_t>(1, n * c.percent / 100);
}

std::mt19937_64 stream(const SelftestConfig& c, std::uint64_t salt) {
  std::seed_seq seq{c.seed, salt};
  return std::mt19937_64(seq);
}

/// Collects the first failure; later ones are only counted.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ == 0) first_ = what;
  }
  bool any() const noexcept { return count_ > 0; }
  std::string describe() const {
    return std::to_string(count_) + " failure(s); first: " + first_;
  }

 private:
  std::size_t count_ = 0;
  std::string first_;
};

/// The shared corpus of small CSPs: |V| <= 6, |D| <= 3, at most 4
/// constraints of arity <= 3, k <= 3. Instance i depends only on (seed, i).
CspInstance corpus_instance(const SelftestConfig& c, std::size_t i) {
  auto rng = stream(c, 1000 + i);
  GeneratorConfig g;
  g.variables = static_cast<unsigned>(draw(rng, 1, 6));
  g.domain = static_cast<unsigned>(draw(rng, 2, 3));
  g.constraints = static_cast<unsigned>(draw(rng, 0, 4));
  g.max_arity = static_cast<unsigned>(draw(rng, 1, 3));
  g.density = static_cast<double>(draw(rng, 1, 4)) / 5.0;
  g.k = static_cast<unsigned>(draw(rng, 0, std::min(3u, g.variables)));
  g.plant = coin(rng, 1, 2);
  return CspInstance::from_spec(random_instance_spec(g, rng));
}

constexpr std::size_t kCorpusSize = 1000;

/// Calls visit(b) for every support of size exactly k.
template <class Visit>
void for_each_support(const CspInstance& inst, unsigned k, Visit visit) {
  const std::size_t n = inst.variables().size();
  const auto& values = inst.nonzero_values();
  if (k > n || (k > 0 && values.empty())) return;
  std::vector<std::size_t> vars(k);
  for (std::size_t i = 0; i < k; ++i) vars[i] = i;
  do {
    std::vector<std::size_t> digit(k, 0);
    while (true) {
      std::vector<Pair> pairs;
      for (std::size_t i = 0; i < k; ++i) pairs.push_back({static_cast<VarId>(vars[i]), values[digit[i]]});
      visit(Assignment(std::move(pairs)));
      std::size_t pos = 0;
      while (pos < k && ++digit[pos] == values.size()) digit[pos++] = 0;
      if (pos == k) break;
    }
  } while (k > 0 && next_combination(vars, n));
}

PropertyResult finish(const std::string& name, const Failures& f, const std::string& ok_detail, Clock::time_point t0) {
  PropertyResult r;
  r.name = name;
  r.pass = !f.any();
  r.detail = r.pass ? ok_detail : f.describe();
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

// ---------------------------------------------------------------------------

PropertyResult solver_oracle(const SelftestConfig& c) {
  const auto t0 = Clock::now();
  Failures f;
  const std::size_t count = scaled(c, kCorpusSize);
  std::size_t yes = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const CspInstance inst = corpus_instance(c, i);
    SolveOptions opts;
    opts.paranoid = true;
    const auto got = solve(inst, opts).witness;
    const auto want = oracle_solve(inst);
    if (got.has_value() != want.has_value()) {
      f.add("instance " + std::to_string(i) + ": solver says " + (got ? "yes" : "no") + ", oracle says " +
            (want ? "yes" : "no"));
    } else if (got && (got->size() != inst.k() || !satisfies_all(*got, inst))) {
      f.add("instance " + std::to_string(i) + ": witness does not satisfy the instance");
    }
    yes += got ? 1 : 0;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 60.0) f.add("took " + std::to_string(secs) + " s, limit 60 s");
  return finish("solver-oracle-equivalence", f,
                std::to_string(count) + " instances, " + std::to_string(yes) + " satisfiable", t0);
}

PropertyResult unit_sum_law(const SelftestConfig& c) {
  const auto t0 = Clock::now();
  Failures f;
  const std::size_t count = scaled(c, kCorpusSize);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const CspInstance inst = corpus_instance(c, i);
    const auto tables = build_tables(normalize(inst));
    for (const auto& block : tables.blocks()) {
      for (const auto& ww : block.witness_weights) {
        for (const auto& u : ww.witnesses) {
          std::int64_t sum = 0;
          for (std::size_t w = 0; w < ww.witnesses.size(); ++w) {
            if (ww.witnesses[w].subset_of(u)) sum += ww.weights[w];
          }
          ++checked;
          if (sum != 1) f.add("instance " + std::to_string(i) + ": down-set sum " + std::to_string(sum));
        }
      }
    }
  }
  return finish("unit-sum-law", f, std::to_string(checked) + " down-set sums over " + std::to_string(count) + " instances",
                t0);
}

PropertyResult mobius_round_trip(const SelftestConfig& c) {
  const auto t0 = Clock::now();
  Failures f;
  auto rng = stream(c, 3);
  const std::size_t count = scaled(c, 1000);
  for (std::size_t i = 0; i < count; ++i) {
    // A random family of subsets of a ground set of up to 4 variables,
    // always containing the empty set (the minimum), at most 12 members.
    SubsetPosetSpec ambient;
    const auto vars = draw(rng, 1, 4);
    for (VarId v = 0; v < vars; ++v) ambient.vars.push_back(v);
    ambient.nonzero_values = {1};
    auto all = all_supports(ambient);
    std::vector<Assignment> family{Assignment()};
    std::shuffle(all.begin() + 1, all.end(), rng);
    const auto extra = draw(rng, 0, std::min<std::uint64_t>(11, all.size() - 1));
    family.insert(family.end(), all.begin() + 1, all.begin() + 1 + static_cast<std::ptrdiff_t>(extra));
    auto poset = subset_poset(family);

    IntegerWeighting w(poset.size());
    for (auto& x : w) x = static_cast<std::int64_t>(draw(rng, 0, 200)) - 100;
    const auto back = invert(poset, accumulate(poset, w));
    if (back != w) f.add("poset " + std::to_string(i) + " of size " + std::to_string(poset.size()));
  }
  return finish("mobius-round-trip", f, std::to_string(count) + " weightings", t0);
}

PropertyResult cover_lemma(const SelftestConfig& c) {
  const auto t0 = Clock::now();
  Failures f;
  auto rng = stream(c, 4);
  const std::size_t count = scaled(c, 500);
  std::size_t checks = 0;
  for (std::size_t i = 0; i < count; ++i) {
    // Ground of at most 4 (variable, value) pairs.
    SubsetPosetSpec ambient;
    const auto values = draw(rng, 1, 2);
    const auto vars = draw(rng, 1, 4 / values);
    for (VarId v = 0; v < vars; ++v) ambient.vars.push_back(v);
    for (ValueId d = 1; d <= values; ++d) ambient.nonzero_values.push_back(d);
    const auto all = all_supports(ambient);
    std::vector<Assignment> q;
    for (const auto& a : all) {
      if (coin(rng, 1, 2)) q.push_back(a);
    }
    const auto frontier = cover_frontier(q, ambient, /*patch_empty=*/false);
    const std::set<Assignment> in_q(q.begin(), q.end());
    const std::set<Assignment> in_frontier(frontier.begin(), frontier.end());
    for (const auto& y : all) {
      std::vector<Assignment> below;
      for (const auto& w : all) {
        if ((in_q.count(w) || in_frontier.count(w)) && w.subset_of(y)) below.push_back(w);
      }
      const auto top = maximal_elements(below, [](const Assignment& a, const Assignment& b) { return a.subset_of(b); });
      const bool all_frontier =
          std::all_of(top.begin(), top.end(), [&](const Assignment& a) { return in_frontier.count(a) > 0; });
      ++checks;
      if ((in_q.count(y) == 0) != all_frontier) f.add("pair " + std::to_string(i));
    }
  }
  return finish("cover-lemma", f, std::to_string(checks) + " biconditionals over " + std::to_string(count) + " pairs",
                t0);
}

PropertyResult lookup_cost(const SelftestConfig& c) {
  const auto t0 = Clock::now();
  Failures f;
  const std::size_t count = scaled(c, kCorpusSize);
  std::uint64_t candidates = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const CspInstance inst = corpus_instance(c, i);
    const auto tables = build_tables(normalize(inst));
    const std::uint64_t k = inst.k();
    for_each_support(inst, inst.k(), [&](const Assignment& b) {
      const auto check = check_candidate(b, tables);
      ++candidates;
      if (check.stats.d_lookups > (std::uint64_t{1} << k) || check.stats.l_lookups > (std::uint64_t{1} << (2 * k))) {
        f.add("instance " + std::to_string(i) + ": d=" + std::to_string(check.stats.d_lookups) +
              " l=" + std::to_string(check.stats.l_lookups) + " for k=" + std::to_string(k));
      }
    });
  }

  // Fixed k = 2: every candidate of the path family costs the same
  // regardless of the number of variables.
  std::set<std::pair<std::uint64_t, std::uint64_t>> costs;
  std::ostringstream per_n;
  for (unsigned n : {10u, 50u, 100u, 500u}) {
    const CspInstance inst = path_cover_instance(n);
    const auto tables = build_tables(normalize(inst));
    std::set<std::pair<std::uint64_t, std::uint64_t>> here;
    for_each_support(inst, 2, [&](const Assignment& b) {
      const auto s = check_candidate(b, tables).stats;
      here.insert({s.d_lookups, s.l_lookups});
    });
    for (const auto& p : here) per_n << " n=" << n << ":d=" << p.first << ",l=" << p.second;
    costs.insert(here.begin(), here.end());
  }
  if (costs.size() != 1) f.add("per-candidate lookups vary with n:" + per_n.str());

  return finish("lookup-cost", f,
                std::to_string(candidates) + " candidate checks within 2^k/4^k;" + per_n.str(), t0);
}

PropertyResult size_bounds(const SelftestConfig& c) {
  const auto t0 = Clock::now();
  Failures f;
  const std::size_t count = scaled(c, kCorpusSize);
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const CspInstance inst = corpus_instance(c, i);
    const auto normalized = normalize(inst);
    const auto tables = build_tables(normalized);
    const std::size_t d = inst.domain().size();
    for (const auto& bt : tables.blocks()) {
      const SatSet& s = normalized.blocks()[bt.block];
      ++blocks;
      if (bt.frontier.size() > s.vars.size() * d * (s.members.size() + 1) + 1) {
        f.add("instance " + std::to_string(i) + ": frontier of " + std::to_string(bt.frontier.size()));
      }
      if (s.members.size() > s.listed_tuples) {
        f.add("instance " + std::to_string(i) + ": " + std::to_string(s.members.size()) + " members from " +
              std::to_string(s.listed_tuples) + " tuples");
      }
    }
  }
  return finish("size-bounds", f, std::to_string(blocks) + " blocks", t0);
}

PropertyResult subset_sum_equivalence(const SelftestConfig& c) {
  const auto t0 = Clock::now();
  Failures f;
  auto rng = stream(c, 7);
  const std::size_t count = scaled(c, 10000);
  std::size_t equal = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = draw(rng, 1, 20);
    const auto k = static_cast<unsigned>(draw(rng, 0, std::min<std::uint64_t>(4, n)));
    const std::uint64_t max_value = saturating_pow(n, k);
    auto inst = random_subset_sum(n, k, max_value, coin(rng, 1, 3), rng);

    std::vector<std::size_t> all(n);
    for (std::size_t j = 0; j < n; ++j) all[j] = j;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::size_t> b(all.begin(), all.begin() + k);
    std::sort(b.begin(), b.end());
    if (coin(rng, 1, 3)) {
      BigInt t = 0;
      for (auto j : b) t += inst.values[j];
      inst.target = t;
    }

    const auto tables = make_digit_tables(inst);
    const auto trace = trace_sum(b, tables, k);
    BigInt sum = 0;
    for (auto j : b) sum += inst.values[j];
    const bool exact = sum == inst.target;
    equal += exact ? 1 : 0;
    if (trace.accepted != exact) f.add("pair " + std::to_string(i) + ": digit check disagrees with exact sum");
    for (auto carry : trace.carries) {
      if (carry > k + 1) f.add("pair " + std::to_string(i) + ": carry " + std::to_string(carry));
    }
    if (trace.max_intermediate > (k + 1) * tables.base) {
      f.add("pair " + std::to_string(i) + ": intermediate " + std::to_string(trace.max_intermediate));
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 30.0) f.add("took " + std::to_string(secs) + " s, limit 30 s");
  return finish("subset-sum-equivalence", f,
                std::to_string(count) + " pairs, " + std::to_string(equal) + " with equal sums", t0);
}

PropertyResult weighted_equivalence(const SelftestConfig& c) {
  const auto t0 = Clock::now();
  Failures f;
  auto rng = stream(c, 8);
  const std::size_t count = scaled(c, 1000);
  std::size_t yes = 0;
  std::uint64_t weight_failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorConfig g;
    g.variables = static_cast<unsigned>(draw(rng, 1, 6));
    g.domain = 2;
    g.constraints = static_cast<unsigned>(draw(rng, 0, 4));
    g.max_arity = static_cast<unsigned>(draw(rng, 1, 3));
    g.density = static_cast<double>(draw(rng, 1, 4)) / 5.0;
    g.k = static_cast<unsigned>(draw(rng, 0, std::min(3u, g.variables)));
    g.plant = coin(rng, 1, 2);
    g.weights = true;
    g.target = true;
    g.max_weight = draw(rng, 1, 12);
    const WeightedCspInstance inst(CspInstance::from_spec(random_instance_spec(g, rng)));

    const auto got = solve_wcsp(inst).witness;
    const auto want = oracle_wcsp(inst);
    yes += want ? 1 : 0;
    if (got.has_value() != want.has_value()) f.add("instance " + std::to_string(i) + ": decisions differ");

    const auto tables = build_weighted_tables(inst);
    for_each_support(inst.base(), inst.base().k(), [&](const Assignment& b) {
      const auto check = check_weighted_candidate(b, inst, tables);
      if (!check.weight_ok) {
        ++weight_failures;
        if (!(check.stats == LookupStats{})) f.add("instance " + std::to_string(i) + ": weight failure did lookups");
      }
    });
  }
  return finish("weighted-csp-equivalence", f,
                std::to_string(count) + " instances, " + std::to_string(yes) + " satisfiable, " +
                    std::to_string(weight_failures) + " weight-failing candidates with no lookups",
                t0);
}

PropertyResult hitting_equivalence(const SelftestConfig& c) {
  const auto t0 = Clock::now();
  Failures f;
  auto rng = stream(c, 9);
  const std::size_t count = scaled(c, 500);
  std::size_t yes = 0;
  for (std::size_t i = 0; i < count; ++i) {
    HypergraphConfig h;
    h.ground = static_cast<unsigned>(draw(rng, 1, 7));
    h.hypergraphs = static_cast<unsigned>(draw(rng, 0, 4));
    h.max_vertices = 4;
    h.max_edges = static_cast<unsigned>(draw(rng, 0, 5));
    h.k = static_cast<unsigned>(draw(rng, 0, std::min(3u, h.ground)));
    const auto family = random_hypergraph_family(h, rng);

    const auto got = solve_hitting(family);
    const auto want = oracle_hitting(family);
    yes += want ? 1 : 0;
    if (got.has_value() != want.has_value()) {
      f.add("family " + std::to_string(i) + ": decisions differ");
      continue;
    }
    if (!got) continue;
    // Direct check of the returned set.
    const std::set<std::string> s(got->begin(), got->end());
    bool ok = s.size() == static_cast<std::size_t>(family.k);
    for (const auto& g : family.hypergraphs) {
      std::vector<std::string> meet;
      for (const auto& v : g.vertices) {
        if (s.count(v)) meet.push_back(v);
      }
      std::sort(meet.begin(), meet.end());
      bool found = false;
      for (auto e : g.edges) {
        std::sort(e.begin(), e.end());
        found = found || e == meet;
      }
      ok = ok && found;
    }
    if (!ok) f.add("family " + std::to_string(i) + ": returned set does not hit every hypergraph");
  }
  return finish("hitting-set-equivalence", f,
                std::to_string(count) + " families, " + std::to_string(yes) + " with a hitting set", t0);
}

PropertyResult nram_audit(const SelftestConfig& c) {
  const auto t0 = Clock::now();
  Failures f;
  auto rng = stream(c, 10);
  const auto& program = nram::subset_sum_program();
  const auto& manifest = nram::SubsetSumManifest::bundled();
  const std::size_t per_shape = scaled(c, 10);
  std::size_t runs = 0;
  std::size_t yes = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (unsigned k = 0; k <= std::min<std::size_t>(3, n); ++k) {
      for (std::size_t rep = 0; rep < per_shape; ++rep) {
        const auto inst = random_subset_sum(n, k, saturating_pow(n, k), rep % 2 == 0, rng);
        const auto tables = make_digit_tables(inst);
        const auto bounds = manifest.bounds(n, k, tables.base, tables.width);
        const auto report = nram::audit(program, nram::subset_sum_registers(tables, k, manifest),
                                        nram::GuessStrategy::exhaustive(), bounds);
        const bool want = solve(inst).has_value();
        const bool got = report.outcome == nram::Outcome::Accept;
        ++runs;
        yes += want ? 1 : 0;
        const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " rep " + std::to_string(rep);
        if (report.outcome == nram::Outcome::OutOfBudget) f.add(where + ": a path exceeded the step bound");
        if (got != want) f.add(where + ": program decision differs from the digit solver");
        if (!report.passed()) f.add(where + ":\n" + report.render());
      }
    }
  }
  return finish("nram-audit", f,
                std::to_string(runs) + " exhaustive audits, " + std::to_string(yes) + " accepting, all within manifest",
                t0);
}

PropertyResult empty_frontier_regression(const SelftestConfig&) {
  const auto t0 = Clock::now();
  Failures f;
  InstanceSpec spec;
  spec.domain = {"0", "1"};
  spec.free_value = "0";
  spec.variables = {"x", "y"};
  spec.relations.emplace("R", RelationSpec{1, {{"1"}}});
  spec.constraints.push_back({"R", {"x"}});
  spec.k = 1;
  const auto inst = CspInstance::from_spec(spec);
  const auto normalized = normalize(inst);
  const Assignment x1({{0, 1}});
  const Assignment y1({{1, 1}});

  TableOptions patched;
  const auto with_patch = build_tables(normalized, patched);
  if (check_candidate(y1, with_patch).accepted) f.add("patched tables accept y=1");
  if (!check_candidate(x1, with_patch).accepted) f.add("patched tables reject x=1");

  TableOptions literal;
  literal.patch_empty = false;
  const auto without_patch = build_tables(normalized, literal);
  if (!check_candidate(y1, without_patch).accepted) f.add("unpatched tables no longer accept y=1");

  return finish("empty-frontier-regression", f,
                "patched: y=1 rejected, x=1 accepted; unpatched: y=1 accepted", t0);
}

}  // namespace

const std::vector<Property>& properties() {
  static const std::vector<Property> all = {
      {"solver-oracle-equivalence", "table solver and brute force agree on 1000 small CSPs in under 60 s",
       solver_oracle},
      {"unit-sum-law", "every witness down-set sums to 1", unit_sum_law},
      {"mobius-round-trip", "Mobius inversion undoes zeta accumulation on random subset posets", mobius_round_trip},
      {"cover-lemma", "y outside Q iff every maximal element below y lies in the frontier", cover_lemma},
      {"lookup-cost", "per-candidate lookups within 2^k and 4^k, constant in n for k = 2", lookup_cost},
      {"size-bounds", "frontier and satisfying-set sizes polynomial in the listed input", size_bounds},
      {"subset-sum-equivalence", "digit check equals exact comparison, carries at most k + 1", subset_sum_equivalence},
      {"weighted-csp-equivalence", "weighted solver agrees with brute force, weight failures skip the tables",
       weighted_equivalence},
      {"hitting-set-equivalence", "reduction agrees with direct intersection checks", hitting_equivalence},
      {"nram-audit", "bundled NRAM program decides like the digit solver within its frozen manifest", nram_audit},
      {"empty-frontier-regression", "empty-support frontier patch closes the unconstrained-variable gap",
       empty_frontier_regression},
  };
  return all;
}

std::vector<PropertyResult> run_selftest(const SelftestConfig& config, const std::vector<std::string>& only,
                                         const std::function<void(const PropertyResult&)>& on_result) {
  for (const auto& name : only) {
    const auto& all = properties();
    if (std::none_of(all.begin(), all.end(), [&](const Property& p) { return p.name == name; })) {
      throw UsageError("unknown property '" + name + "'");
    }
  }
  std::vector<PropertyResult> out;
  for (const auto& p : properties()) {
    if (!only.empty() && std::find(only.begin(), only.end(), p.name) == only.end()) continue;
    PropertyResult r;
    try {
      r = p.run(config);
    } catch (const std::exception& e) {
      r.name = p.name;
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string render(const PropertyResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.pass ? "PASS " : "FAIL ") + r.name + " (" + secs + " s) " + r.detail;
}

}  // namespace w1
