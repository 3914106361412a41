#include "w1/weighted_csp.hpp"

#include <numeric>

#include "w1/combinatorics.hpp"
#include "w1/error.hpp"
#include "w1/normalize.hpp"

namespace w1 {

WeightedCspInstance::WeightedCspInstance(CspInstance base) : base_(std::move(base)) {
  if (base_.domain().size() != 2) throw UsageError("weighted CSP needs a two-value domain");
  if (!base_.weights()) throw UsageError("weighted CSP needs \"weights\"");
  if (!base_.target()) throw UsageError("weighted CSP needs \"target\"");
  one_ = base_.nonzero_values().front();
  for (VarId v = 0; v < base_.variables().size(); ++v) {
    auto it = base_.weights()->find(v);
    if (it == base_.weights()->end()) throw UsageError("variable '" + base_.variables()[v] + "' has no weight");
    weights_.push_back(it->second);
  }
  target_ = *base_.target();
}

WeightedTables build_weighted_tables(const WeightedCspInstance& inst, const TableOptions& options,
                                     std::optional<std::uint64_t> base) {
  // Deterministic part of the constraint check first, then the digit tables.
  VerificationTables constraints = build_tables(normalize(inst.base()), options);
  const std::uint64_t b = base.value_or(std::max<std::uint64_t>(inst.base().variables().size(), 2));
  DigitTables weights = make_digit_tables(inst.weights(), inst.target(), b, inst.base().f_of_k());
  return {std::move(constraints), std::move(weights)};
}

WeightedCheck check_weighted_candidate(const Assignment& b, const WeightedCspInstance& inst,
                                       const WeightedTables& tables) {
  WeightedCheck out;
  std::vector<std::size_t> indices;
  indices.reserve(b.size());
  for (const Pair& p : b.pairs()) indices.push_back(p.var);
  out.weight_ok = check_sum(indices, tables.weights, inst.base().k());
  if (!out.weight_ok) return out;
  CandidateCheck c = check_candidate(b, tables.constraints);
  out.accepted = c.accepted;
  out.stats = c.stats;
  return out;
}

WeightedSolveResult solve_wcsp(const WeightedCspInstance& inst, const SolveOptions& options) {
  const CspInstance& base = inst.base();
  if (saturating_binomial(base.variables().size(), base.k()) > options.max_candidates) {
    throw ResourceLimitError("candidate space exceeds the cap of " + std::to_string(options.max_candidates));
  }
  TableOptions topts = options.tables;
  topts.jobs = std::max(topts.jobs, options.jobs);
  WeightedTables tables = build_weighted_tables(inst, topts);

  const unsigned jobs = std::max(1u, options.jobs);
  struct WorkerState {
    std::optional<Assignment> witness;
    std::uint64_t checked = 0;
    std::uint64_t weight_rejections = 0;
    LookupStats stats;
  };
  std::vector<WorkerState> state(jobs);
  auto hit = search_subsets(base.variables().size(), base.k(), jobs, options.deterministic,
                            [&](std::span<const std::size_t> vars, unsigned worker) {
                              WorkerState& ws = state[worker];
                              std::vector<Pair> pairs;
                              for (std::size_t v : vars) pairs.push_back({static_cast<VarId>(v), inst.one()});
                              Assignment b(std::move(pairs));
                              WeightedCheck c = check_weighted_candidate(b, inst, tables);
                              ++ws.checked;
                              ws.weight_rejections += c.weight_ok ? 0 : 1;
                              ws.stats += c.stats;
                              if (!c.accepted) return false;
                              ws.witness = std::move(b);
                              return true;
                            });
  WeightedSolveResult out;
  for (const auto& ws : state) {
    out.candidates_checked += ws.checked;
    out.weight_rejections += ws.weight_rejections;
    out.stats += ws.stats;
  }
  if (hit) {
    out.witness = state[hit->worker].witness;
    bool check = options.paranoid;
#ifndef NDEBUG
    check = true;
#endif
    if (check) {
      cross_check_witness(*out.witness, base);
      BigInt sum = 0;
      for (const Pair& p : out.witness->pairs()) sum += inst.weights()[p.var];
      if (sum != inst.target()) throw InternalError("accepted witness misses the weight target");
    }
  }
  return out;
}

std::optional<Assignment> oracle_wcsp(const WeightedCspInstance& inst, std::uint64_t max_candidates) {
  const CspInstance& base = inst.base();
  const std::size_t n = base.variables().size();
  if (base.k() > n) return std::nullopt;
  if (saturating_binomial(n, base.k()) > max_candidates) {
    throw ResourceLimitError("oracle candidate space exceeds the cap of " + std::to_string(max_candidates));
  }
  std::vector<std::size_t> idx(base.k());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  do {
    BigInt sum = 0;
    std::vector<Pair> pairs;
    for (std::size_t v : idx) {
      sum += inst.weights()[v];
      pairs.push_back({static_cast<VarId>(v), inst.one()});
    }
    if (sum != inst.target()) continue;
    Assignment a(std::move(pairs));
    bool ok = true;
    for (const Constraint& c : base.constraints()) ok = ok && satisfies(a, c, base);
    if (ok) return a;
  } while (next_combination(idx, n));
  return std::nullopt;
}

}  // namespace w1
