#include "w1/subset_sum.hpp"

#include <algorithm>
#include <numeric>

#include "w1/combinatorics.hpp"
#include "w1/error.hpp"

namespace w1 {

void validate(const SubsetSumInstance& inst) {
  if (inst.values.empty()) throw UsageError("subset-sum instance needs n >= 1 values");
  for (const auto& v : inst.values) {
    if (v < 0) throw UsageError("subset-sum values must be nonnegative");
  }
  if (inst.target < 0) throw UsageError("subset-sum target must be nonnegative");
}

std::vector<std::uint64_t> digits(const BigInt& value, std::uint64_t base, std::size_t width) {
  if (base < 2) throw UsageError("digit base must be at least 2");
  if (value < 0) throw UsageError("cannot take digits of a negative value");
  std::vector<std::uint64_t> out(width, 0);
  BigInt rest = value;
  const BigInt b = base;
  for (std::size_t j = 0; j < width && rest != 0; ++j) {
    out[j] = static_cast<std::uint64_t>(rest % b);
    rest /= b;
  }
  if (rest != 0) {
    throw UsageError("value " + to_decimal(value) + " needs more than " + std::to_string(width) +
                     " base-" + std::to_string(base) + " digits");
  }
  return out;
}

namespace {

std::size_t digit_count(BigInt v, std::uint64_t base) {
  std::size_t n = 1;
  while (v >= base) {
    v /= base;
    ++n;
  }
  return n;
}

}  // namespace

DigitTables make_digit_tables(std::span<const BigInt> values, const BigInt& target, std::uint64_t base,
                              std::optional<unsigned> f_of_k) {
  if (base < 2) throw UsageError("digit base must be at least 2");
  BigInt largest = target;
  for (const auto& v : values) largest = std::max(largest, v);

  DigitTables t;
  t.base = base;
  if (f_of_k) {
    BigInt cap = boost::multiprecision::pow(BigInt(base), *f_of_k);
    if (largest > cap) {
      throw UsageError("f(k) = " + std::to_string(*f_of_k) + " is too small: " + to_decimal(largest) +
                       " exceeds base^f(k)");
    }
    t.width = *f_of_k + 1;
  } else {
    t.width = digit_count(largest, base);
  }
  t.x_digits.reserve(values.size() * t.width);
  for (const auto& v : values) {
    auto d = digits(v, base, t.width);
    t.x_digits.insert(t.x_digits.end(), d.begin(), d.end());
  }
  t.t_digits = digits(target, base, t.width);
  return t;
}

DigitTables make_digit_tables(const SubsetSumInstance& inst) {
  validate(inst);
  const std::uint64_t base = std::max<std::uint64_t>(inst.values.size(), 2);
  return make_digit_tables(inst.values, inst.target, base, inst.f_of_k);
}

SumTrace trace_sum(std::span<const std::size_t> b, const DigitTables& tables, unsigned k) {
  if (b.size() != k) throw UsageError("index set has the wrong size");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] >= tables.count()) throw UsageError("index out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (b[i] == b[j]) throw UsageError("indices must be distinct");
    }
  }
  SumTrace out;
  std::uint64_t carry = 0;
  for (std::size_t j = 0; j < tables.width; ++j) {
    std::uint64_t column = carry;
    for (std::size_t i : b) column += tables.x(i, j);
    out.max_intermediate = std::max(out.max_intermediate, column);
    const std::uint64_t remainder = column % tables.base;
    carry = column / tables.base;
    out.carries.push_back(carry);
    if (remainder != tables.t_digits[j]) return out;
  }
  out.accepted = carry == 0;
  return out;
}

bool check_sum(std::span<const std::size_t> b, const DigitTables& tables, unsigned k) {
  return trace_sum(b, tables, k).accepted;
}

std::optional<std::vector<std::size_t>> solve(const SubsetSumInstance& inst, const SubsetSumOptions& options) {
  DigitTables tables = make_digit_tables(inst);
  const std::size_t n = inst.values.size();
  if (saturating_binomial(n, inst.k) > options.max_candidates) {
    throw ResourceLimitError("subset-sum candidate space exceeds the cap of " +
                             std::to_string(options.max_candidates));
  }
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::vector<std::size_t>> found(jobs);
  auto hit = search_subsets(n, inst.k, jobs, options.deterministic,
                            [&](std::span<const std::size_t> b, unsigned worker) {
                              if (!check_sum(b, tables, inst.k)) return false;
                              found[worker].assign(b.begin(), b.end());
                              return true;
                            });
  if (!hit) return std::nullopt;
  return found[hit->worker];
}

std::optional<std::vector<std::size_t>> oracle_subset_sum(const SubsetSumInstance& inst) {
  validate(inst);
  const std::size_t n = inst.values.size();
  if (inst.k > n) return std::nullopt;
  std::vector<std::size_t> idx(inst.k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  do {
    BigInt sum = 0;
    for (std::size_t i : idx) sum += inst.values[i];
    if (sum == inst.target) return idx;
  } while (next_combination(idx, n));
  return std::nullopt;
}

}  // namespace w1
