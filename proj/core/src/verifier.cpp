#include "w1/verifier.hpp"

#include <mutex>

#include "w1/combinatorics.hpp"
#include "w1/error.hpp"

namespace w1 {

CandidateCheck check_candidate(const Assignment& b, const VerificationTables& tables) {
  if (b.size() != tables.k()) {
    throw UsageError("certificate has size " + std::to_string(b.size()) + ", expected k = " +
                     std::to_string(tables.k()));
  }
  if (b.size() > 30) throw UsageError("certificate too large for subset enumeration");

  const auto pairs = b.pairs();
  const std::size_t k = pairs.size();
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;

  std::vector<TrieSymbol> key;
  auto append_mask = [&](std::uint64_t mask) {
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) key.push_back(pack_symbol(pairs[i]));
    }
  };

  CandidateCheck out;
  out.accepted = true;
  for (std::uint64_t t = 0; t <= full; ++t) {
    key.clear();
    append_mask(t);
    auto d = tables.d_trie().lookup(key);
    ++out.stats.d_lookups;
    out.stats.nodes_touched += d.nodes_touched;
    if (d.value <= 0) continue;

    const std::size_t t_len = key.size();
    const std::uint64_t rest = full & ~t;
    std::int64_t sum = 0;
    // Nonzero submasks of `rest`, ascending: W = T | extra.
    for (std::uint64_t extra = rest & (~rest + 1); extra != 0; extra = (extra - rest) & rest) {
      key.resize(t_len);
      key.push_back(kTrieSeparator);
      append_mask(t | extra);
      auto l = tables.l_trie().lookup(key);
      ++out.stats.l_lookups;
      out.stats.nodes_touched += l.nodes_touched;
      sum = checked_add(sum, l.value);
    }
    if (sum != d.value) out.accepted = false;
  }
  return out;
}

std::uint64_t candidate_count(const CspInstance& inst) {
  return saturating_mul(saturating_binomial(inst.variables().size(), inst.k()),
                        saturating_pow(inst.nonzero_values().size(), inst.k()));
}

void cross_check_witness(const Assignment& witness, const CspInstance& inst) {
  if (witness.size() != inst.k() || !satisfies_all(witness, inst)) {
    throw InternalError("accepted witness " + format_assignment(witness, inst) +
                        " violates the source instance");
  }
}

SolveResult solve(const CspInstance& inst, const SolveOptions& options) {
  if (candidate_count(inst) > options.max_candidates) {
    throw ResourceLimitError("candidate space exceeds the cap of " + std::to_string(options.max_candidates));
  }
  auto normalized = normalize(inst);
  TableOptions topts = options.tables;
  topts.jobs = std::max(topts.jobs, options.jobs);
  return solve(inst, build_tables(normalized, topts), options);
}

SolveResult solve(const CspInstance& inst, const VerificationTables& tables, const SolveOptions& options) {
  if (candidate_count(inst) > options.max_candidates) {
    throw ResourceLimitError("candidate space exceeds the cap of " + std::to_string(options.max_candidates));
  }
  const std::size_t k = inst.k();
  const auto& values = inst.nonzero_values();
  const unsigned jobs = std::max(1u, options.jobs);

  struct WorkerState {
    std::optional<Assignment> witness;
    std::uint64_t checked = 0;
    LookupStats stats;
  };
  std::vector<WorkerState> state(jobs);

  auto visit = [&](std::span<const std::size_t> vars, unsigned worker) {
    WorkerState& ws = state[worker];
    if (k > 0 && values.empty()) return false;
    std::vector<std::size_t> digit(k, 0);
    std::vector<Pair> pairs(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) pairs[i] = {static_cast<VarId>(vars[i]), values[digit[i]]};
      Assignment b(pairs);
      CandidateCheck c = check_candidate(b, tables);
      ++ws.checked;
      ws.stats += c.stats;
      if (c.accepted) {
        ws.witness = std::move(b);
        return true;
      }
      std::size_t pos = k;
      while (pos > 0 && ++digit[pos - 1] == values.size()) digit[--pos] = 0;
      if (pos == 0) return false;
    }
  };

  auto hit = search_subsets(inst.variables().size(), k, jobs, options.deterministic, visit);

  SolveResult out;
  for (const auto& ws : state) {
    out.candidates_checked += ws.checked;
    out.stats += ws.stats;
  }
  if (hit) {
    out.witness = state[hit->worker].witness;
    bool check = options.paranoid;
#ifndef NDEBUG
    check = true;
#endif
    if (check) cross_check_witness(*out.witness, inst);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reference solver

namespace {

struct OracleSearch {
  const CspInstance& inst;
  std::vector<Pair> chosen;

  bool check() const {
    Assignment a(chosen);
    for (const Constraint& c : inst.constraints()) {
      if (!satisfies(a, c, inst)) return false;
    }
    return true;
  }

  // Decide variables in order; `need` pairs remain to place.
  bool search(VarId next, std::size_t need) {
    if (need == 0) return check();
    if (inst.variables().size() - next < need) return false;
    for (ValueId d : inst.nonzero_values()) {
      chosen.push_back({next, d});
      if (search(next + 1, need - 1)) return true;
      chosen.pop_back();
    }
    return search(next + 1, need);
  }
};

}  // namespace

std::optional<Assignment> oracle_solve(const CspInstance& inst, std::uint64_t max_candidates) {
  if (candidate_count(inst) > max_candidates) {
    throw ResourceLimitError("oracle candidate space exceeds the cap of " + std::to_string(max_candidates));
  }
  OracleSearch s{inst, {}};
  if (s.search(0, inst.k())) return Assignment(s.chosen);
  return std::nullopt;
}

}  // namespace w1
