#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace w1 {

/// Advances `idx` (strictly increasing, values < n) to the next k-subset in
/// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n);

/// Saturates at UINT64_MAX.
std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

struct SubsetHit {
  std::uint64_t rank = 0;
  unsigned worker = 0;
};

/// Walks the k-subsets of [0, n) in lexicographic order, handing subset
/// number r to worker r % jobs. `visit(subset, worker)` returns true on a
/// hit. Without `deterministic`, the first hit stops everyone; with it, the
/// lowest-ranked hit wins. Exceptions from `visit` are rethrown.
std::optional<SubsetHit> search_subsets(std::size_t n, std::size_t k, unsigned jobs, bool deterministic,
                                        const std::function<bool(std::span<const std::size_t>, unsigned)>& visit);

}  // namespace w1
