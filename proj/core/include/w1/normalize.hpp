#pragma once

// Rebuilds an instance so that every variable set carries exactly one
// constraint, materialized as the explicit set of its satisfying supports.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "w1/instance.hpp"

namespace w1 {

/// Satisfying supports of one variable set S: every assignment A over S with
/// size(A) <= k that satisfies every source constraint whose scope is S.
struct SatSet {
  VarSet vars;
  /// Sorted by SizeLexLess; pairwise distinct.
  std::vector<Assignment> members;
  /// Tuples listed for the relations of the source constraints on S.
  std::size_t listed_tuples = 0;
  /// Indices of the source constraints on S.
  std::vector<std::size_t> constraints;

  bool contains(const Assignment& a) const;
};

class NormalizedInstance {
 public:
  NormalizedInstance(std::shared_ptr<const CspInstance> source, std::vector<SatSet> blocks, unsigned k);

  const CspInstance& source() const noexcept { return *source_; }
  const std::shared_ptr<const CspInstance>& source_ptr() const noexcept { return source_; }
  /// Ordered by the canonical variable set.
  const std::vector<SatSet>& blocks() const noexcept { return blocks_; }
  unsigned k() const noexcept { return k_; }

  const SatSet* find(const VarSet& vars) const;

  /// True iff restrict(b, S) is a member of every block. Valid for size(b) <= k.
  bool accepts(const Assignment& b) const;

 private:
  std::shared_ptr<const CspInstance> source_;
  std::vector<SatSet> blocks_;
  std::map<VarSet, std::size_t> by_vars_;
  unsigned k_;
};

/// Builds one block from the listed tuples of the given constraints (all of
/// which must have scope exactly `vars`). Never enumerates |D|^|S|.
SatSet sat_set(const CspInstance& inst, const VarSet& vars, std::span<const std::size_t> constraint_indices,
               unsigned k);

NormalizedInstance normalize(std::shared_ptr<const CspInstance> inst, std::optional<unsigned> k = std::nullopt);
NormalizedInstance normalize(const CspInstance& inst, std::optional<unsigned> k = std::nullopt);

}  // namespace w1
