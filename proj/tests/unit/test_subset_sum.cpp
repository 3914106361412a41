#include <gtest/gtest.h>

#include <random>

#include "w1/combinatorics.hpp"
#include "w1/error.hpp"
#include "w1/generator.hpp"
#include "w1/subset_sum.hpp"

using namespace w1;

namespace {

SubsetSumInstance make(std::vector<int> xs, int t, unsigned k) {
  SubsetSumInstance inst;
  for (int x : xs) inst.values.emplace_back(x);
  inst.target = t;
  inst.k = k;
  return inst;
}

std::vector<std::size_t> idx(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> out;
  for (auto i : one_based) out.push_back(i - 1);
  return out;
}

}  // namespace

TEST(Digits, Examples) {
  EXPECT_EQ(digits(11, 4, 2), (std::vector<std::uint64_t>{3, 2}));
  EXPECT_EQ(digits(0, 7, 3), (std::vector<std::uint64_t>{0, 0, 0}));
  EXPECT_EQ(digits(5, 4, 3), (std::vector<std::uint64_t>{1, 1, 0}));
  EXPECT_THROW(digits(16, 4, 2), UsageError);
  EXPECT_THROW(digits(1, 1, 2), UsageError);
}

TEST(Digits, ReconstructionRoundTrip) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t base = draw(rng, 2, 40);
    BigInt v = 0;
    for (int j = 0, n = static_cast<int>(draw(rng, 0, 4)); j < n; ++j) v = v * BigInt(rng()) + BigInt(rng() >> 3);
    std::size_t width = 1;
    for (BigInt p = base; p <= v; p *= base) ++width;
    const auto d = digits(v, base, width);
    BigInt back = 0;
    for (std::size_t j = width; j-- > 0;) back = back * base + d[j];
    ASSERT_EQ(back, v);
    for (auto x : d) ASSERT_LT(x, base);
  }
}

TEST(CheckSum, Examples) {
  auto a = make({5, 3, 9, 6}, 11, 2);
  auto ta = make_digit_tables(a);
  EXPECT_TRUE(check_sum(idx({1, 4}), ta, 2));
  EXPECT_FALSE(check_sum(idx({2, 3}), ta, 2));

  auto b = make({3, 3, 2, 1}, 6, 2);
  auto tb = make_digit_tables(b);
  EXPECT_EQ(tb.base, 4u);
  const auto trace = trace_sum(idx({1, 2}), tb, 2);
  EXPECT_TRUE(trace.accepted);
  ASSERT_EQ(trace.carries.size(), 2u);
  EXPECT_EQ(trace.carries[0], 1u);
  EXPECT_EQ(trace.carries[1], 0u);
}

TEST(CheckSum, Preconditions) {
  auto a = make({5, 3, 9, 6}, 11, 2);
  auto t = make_digit_tables(a);
  EXPECT_THROW(check_sum(std::vector<std::size_t>{0}, t, 2), UsageError);
  EXPECT_THROW(check_sum(std::vector<std::size_t>{0, 0}, t, 2), UsageError);
  EXPECT_THROW(check_sum(std::vector<std::size_t>{0, 9}, t, 2), UsageError);
}

TEST(DigitTables, FOfK) {
  auto a = make({5, 3, 9, 6}, 11, 2);
  a.f_of_k = 2;
  auto t = make_digit_tables(a);
  EXPECT_EQ(t.width, 3u);
  a.f_of_k = 1;  // 11 > 4^1
  EXPECT_THROW(make_digit_tables(a), UsageError);
}

TEST(SubsetSumSolve, Examples) {
  EXPECT_EQ(solve(make({5, 3, 9, 6}, 11, 2)), std::optional(idx({1, 4})));
  EXPECT_EQ(solve(make({5, 3, 9, 6}, 0, 0)), std::optional(std::vector<std::size_t>{}));
  EXPECT_FALSE(solve(make({5, 3, 9, 6}, 24, 2)));
  EXPECT_FALSE(solve(make({5, 3, 9, 6}, 24, 4)));
}

TEST(SubsetSumSolve, HugeValuesStayBounded) {
  // Values near 20^30 need arbitrary precision; the digit path never does.
  SubsetSumInstance inst;
  std::mt19937_64 rng(67);
  const BigInt cap = boost::multiprecision::pow(BigInt(20), 30);
  for (int i = 0; i < 20; ++i) inst.values.push_back(cap - BigInt(draw(rng, 0, 1'000'000)));
  inst.k = 3;
  inst.target = inst.values[2] + inst.values[7] + inst.values[19];
  const auto found = solve(inst);
  ASSERT_TRUE(found);
  BigInt sum = 0;
  for (auto i : *found) sum += inst.values[i];
  EXPECT_EQ(sum, inst.target);
  const auto trace = trace_sum(*found, make_digit_tables(inst), 3);
  for (auto c : trace.carries) EXPECT_LE(c, 4u);
  EXPECT_LE(trace.max_intermediate, 4u * 20u);
}

TEST(SubsetSumSolve, AgreesWithOracleAndAcrossJobs) {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 500; ++round) {
    const auto n = draw(rng, 1, 12);
    const auto k = static_cast<unsigned>(draw(rng, 0, std::min<std::uint64_t>(4, n)));
    const auto inst = random_subset_sum(n, k, saturating_pow(n, k), coin(rng, 1, 2), rng);
    const auto want = oracle_subset_sum(inst);
    const auto got = solve(inst);
    EXPECT_EQ(got.has_value(), want.has_value());
    SubsetSumOptions par;
    par.jobs = 3;
    par.deterministic = true;
    EXPECT_EQ(solve(inst, par), got);
  }
}

TEST(Validate, RejectsBadInstances) {
  EXPECT_THROW(validate(make({}, 0, 0)), UsageError);
  EXPECT_THROW(validate(make({-1}, 0, 0)), UsageError);
}
