#pragma once

// k-element subset sum checked digit by digit in base n. Values may be huge
// (up to n^f(k)); the check itself only ever touches numbers bounded by
// (k + 1) * base.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "w1/bigint.hpp"

namespace w1 {

struct SubsetSumInstance {
  std::vector<BigInt> values;
  BigInt target;
  unsigned k = 0;
  std::optional<unsigned> f_of_k;
};

/// Throws UsageError if n == 0 or a value is negative.
void validate(const SubsetSumInstance& inst);

struct DigitTables {
  std::uint64_t base = 2;
  std::size_t width = 1;
  /// Row-major n x width; digit j of value i at [i * width + j].
  std::vector<std::uint64_t> x_digits;
  std::vector<std::uint64_t> t_digits;

  std::size_t count() const noexcept { return width == 0 ? 0 : x_digits.size() / width; }
  std::uint64_t x(std::size_t i, std::size_t j) const { return x_digits[i * width + j]; }
};

/// Least-significant-first base-`base` digits of `value`, exactly `width` of
/// them. Throws UsageError if value >= base^width or base < 2.
std::vector<std::uint64_t> digits(const BigInt& value, std::uint64_t base, std::size_t width);

/// Digit tables in base `base`. Width is the number of digits of the
/// largest of target and values (at least 1); with `f_of_k`, width is
/// f_of_k + 1 and every number must be at most base^f_of_k.
DigitTables make_digit_tables(std::span<const BigInt> values, const BigInt& target, std::uint64_t base,
                              std::optional<unsigned> f_of_k = std::nullopt);

/// Tables for an instance, with base = max(n, 2).
DigitTables make_digit_tables(const SubsetSumInstance& inst);

struct SumTrace {
  bool accepted = false;
  /// c_0 .. c_{width-1}; may stop early on a digit mismatch.
  std::vector<std::uint64_t> carries;
  /// Largest dividend c_{j-1} + sum of digits seen.
  std::uint64_t max_intermediate = 0;
};

/// Digit-wise check of sum_{i in b} x_i == t: per digit, divide the carry
/// plus the digit column by the base; the remainder must match the target
/// digit and the quotient carries on. The final carry must be 0. Indices are
/// 0-based, distinct, |b| == k; violations throw UsageError.
SumTrace trace_sum(std::span<const std::size_t> b, const DigitTables& tables, unsigned k);
bool check_sum(std::span<const std::size_t> b, const DigitTables& tables, unsigned k);

struct SubsetSumOptions {
  unsigned jobs = 1;
  bool deterministic = false;
  std::uint64_t max_candidates = 50'000'000;
};

/// First k-subset (lexicographic, 0-based indices) passing check_sum.
std::optional<std::vector<std::size_t>> solve(const SubsetSumInstance& inst, const SubsetSumOptions& options = {});

/// Exhaustive reference with exact big-integer sums.
std::optional<std::vector<std::size_t>> oracle_subset_sum(const SubsetSumInstance& inst);

}  // namespace w1
