#pragma once

// Boolean CSP with a weight target: candidates are filtered by the digit
// check on their weights first, and only survivors reach the table check.

#include <cstdint>
#include <optional>
#include <vector>

#include "w1/bigint.hpp"
#include "w1/instance.hpp"
#include "w1/subset_sum.hpp"
#include "w1/tables.hpp"
#include "w1/verifier.hpp"

namespace w1 {

class WeightedCspInstance {
 public:
  /// Requires a two-value domain, a weight for every variable, and a target.
  /// Throws UsageError otherwise.
  explicit WeightedCspInstance(CspInstance base);

  const CspInstance& base() const noexcept { return base_; }
  /// Indexed by variable.
  const std::vector<BigInt>& weights() const noexcept { return weights_; }
  const BigInt& target() const noexcept { return target_; }
  ValueId one() const noexcept { return one_; }

 private:
  CspInstance base_;
  std::vector<BigInt> weights_;
  BigInt target_;
  ValueId one_ = 0;
};

/// Everything the guess phase consults: the constraint tables and the
/// weight digit tables (base = max(|V|, 2) unless overridden).
struct WeightedTables {
  VerificationTables constraints;
  DigitTables weights;
};

WeightedTables build_weighted_tables(const WeightedCspInstance& inst, const TableOptions& options = {},
                                     std::optional<std::uint64_t> base = std::nullopt);

struct WeightedCheck {
  bool weight_ok = false;
  bool accepted = false;
  /// Zero whenever weight_ok is false.
  LookupStats stats;
};

/// Weight check, then (only if it passes) the table check.
WeightedCheck check_weighted_candidate(const Assignment& b, const WeightedCspInstance& inst,
                                       const WeightedTables& tables);

struct WeightedSolveResult {
  std::optional<Assignment> witness;
  std::uint64_t candidates_checked = 0;
  std::uint64_t weight_rejections = 0;
  LookupStats stats;
};

WeightedSolveResult solve_wcsp(const WeightedCspInstance& inst, const SolveOptions& options = {});

/// Exhaustive reference: exact weight sums and direct constraint checks.
std::optional<Assignment> oracle_wcsp(const WeightedCspInstance& inst,
                                      std::uint64_t max_candidates = kDefaultMaxCandidates);

}  // namespace w1
