#pragma once

// The guess-and-check phase over precomputed tables. A certificate of size k
// is checked with at most 2^k d-lookups and 4^k l-lookups, independent of
// the instance size; `solve` realizes the guess by enumeration.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "w1/instance.hpp"
#include "w1/tables.hpp"

namespace w1 {

inline constexpr std::uint64_t kDefaultMaxCandidates = 50'000'000;

struct LookupStats {
  std::uint64_t d_lookups = 0;
  std::uint64_t l_lookups = 0;
  std::uint64_t nodes_touched = 0;

  LookupStats& operator+=(const LookupStats& o) {
    d_lookups += o.d_lookups;
    l_lookups += o.l_lookups;
    nodes_touched += o.nodes_touched;
    return *this;
  }
  friend bool operator==(const LookupStats&, const LookupStats&) = default;
};

struct CandidateCheck {
  bool accepted = false;
  LookupStats stats;
};

/// Accepts iff for every T ⊆ b with d[T] > 0 the l-values of all W with
/// T ⊊ W ⊆ b sum to d[T]. Every T is evaluated, so the lookup counts depend
/// only on which subsets of b are frontier elements. Throws UsageError
/// unless size(b) == tables.k().
CandidateCheck check_candidate(const Assignment& b, const VerificationTables& tables);

struct SolveOptions {
  TableOptions tables;
  unsigned jobs = 1;
  /// With several jobs, return the lowest candidate in enumeration order.
  bool deterministic = false;
  /// Re-check every accepted witness against the source constraints. Always
  /// on in builds without NDEBUG.
  bool paranoid = false;
  std::uint64_t max_candidates = kDefaultMaxCandidates;
};

struct SolveResult {
  std::optional<Assignment> witness;
  std::uint64_t candidates_checked = 0;
  LookupStats stats;
};

/// Number of size-k supports: C(|V|, k) * (|D| - 1)^k, saturating.
std::uint64_t candidate_count(const CspInstance& inst);

/// Enumerates supports of size exactly k (k-subsets of variables in
/// lexicographic order, then non-free values per variable as an odometer)
/// and returns the first one the tables accept. Throws ResourceLimitError
/// when the candidate count exceeds `max_candidates`.
SolveResult solve(const CspInstance& inst, const SolveOptions& options = {});
SolveResult solve(const CspInstance& inst, const VerificationTables& tables, const SolveOptions& options = {});

/// Throws InternalError if `witness` violates a source constraint.
void cross_check_witness(const Assignment& witness, const CspInstance& inst);

/// Exhaustive reference solver: tests every size-k support directly against
/// the source constraints. Shares nothing with the table path.
std::optional<Assignment> oracle_solve(const CspInstance& inst,
                                       std::uint64_t max_candidates = kDefaultMaxCandidates);

}  // namespace w1
