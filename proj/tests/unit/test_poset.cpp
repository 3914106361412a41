#include <gtest/gtest.h>

#include <random>

#include "w1/error.hpp"
#include "w1/generator.hpp"
#include "w1/poset.hpp"

using namespace w1;

namespace {

const Assignment kEmpty;
const Assignment kA({{0, 1}});
const Assignment kB({{1, 1}});
const Assignment kAB({{0, 1}, {1, 1}});

FinitePoset<int> chain2() {
  return FinitePoset<int>({0, 1}, [](int a, int b) { return a <= b; });
}

}  // namespace

TEST(Mobius, DiagonalIsOne) {
  auto p = subset_poset({kEmpty, kA, kB, kAB});
  for (const auto& x : p.elements()) EXPECT_EQ(mobius(p, x, x), 1);
}

TEST(Mobius, CoverIsMinusOne) {
  auto p = subset_poset({kEmpty, kA, kB, kAB});
  EXPECT_EQ(mobius(p, kEmpty, kA), -1);
  EXPECT_EQ(mobius(p, kA, kAB), -1);
}

TEST(Mobius, BooleanLatticeTop) {
  auto p = subset_poset({kEmpty, kA, kB, kAB});
  EXPECT_EQ(mobius(p, kEmpty, kAB), 1);
  EXPECT_EQ(mobius(p, kA, kB), 0);  // incomparable
}

TEST(Mobius, BooleanLatticeClosedForm) {
  // mu(X, Y) = (-1)^{|Y \ X|} on the subsets of a 4-set.
  SubsetPosetSpec spec{{0, 1, 2, 3}, {1}};
  auto p = subset_poset(all_supports(spec));
  Mobius<Assignment> mu(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      const auto& x = p.elements()[i];
      const auto& y = p.elements()[j];
      const std::int64_t want = x.subset_of(y) ? ((y.size() - x.size()) % 2 ? -1 : 1) : 0;
      EXPECT_EQ(mu(i, j), want);
    }
  }
}

TEST(Mobius, ElementNotInPoset) {
  auto p = subset_poset({kEmpty, kA});
  EXPECT_THROW(mobius(p, kEmpty, kB), UsageError);
}

TEST(Accumulate, Examples) {
  auto c = chain2();
  EXPECT_EQ(accumulate(c, {0, 0}), (IntegerWeighting{0, 0}));
  EXPECT_EQ(accumulate(c, {1, 1}), (IntegerWeighting{1, 2}));
  FinitePoset<int> single({0}, [](int a, int b) { return a == b; });
  EXPECT_EQ(accumulate(single, {7}), IntegerWeighting{7});
}

TEST(Invert, Examples) {
  auto c = chain2();
  EXPECT_EQ(invert(c, {0, 0}), (IntegerWeighting{0, 0}));
  EXPECT_EQ(invert(c, {1, 2}), (IntegerWeighting{1, 1}));
}

TEST(Invert, NeedsMinimum) {
  auto p = subset_poset({kA, kB});
  EXPECT_THROW(invert(p, {1, 1}), UsageError);
}

TEST(Invert, RoundTripOnRandomPosets) {
  std::mt19937_64 rng(17);
  SubsetPosetSpec spec{{0, 1, 2, 3}, {1}};
  auto all = all_supports(spec);
  for (int round = 0; round < 300; ++round) {
    std::vector<Assignment> family{kEmpty};
    for (std::size_t i = 1; i < all.size() && family.size() < 12; ++i) {
      if (coin(rng, 1, 2)) family.push_back(all[i]);
    }
    auto p = subset_poset(family);
    ASSERT_TRUE(p.satisfies_order_axioms());
    IntegerWeighting f(p.size());
    for (auto& x : f) x = static_cast<std::int64_t>(draw(rng, 0, 40)) - 20;
    EXPECT_EQ(invert(p, accumulate(p, f)), f);
  }
}

TEST(CoverFrontier, Examples) {
  SubsetPosetSpec xy{{0, 1}, {1}};
  EXPECT_EQ(cover_frontier({kA}, xy, true), (std::vector<Assignment>{kEmpty, kAB}));
  EXPECT_TRUE(cover_frontier(all_supports(xy), xy, true).empty());

  SubsetPosetSpec x{{0}, {1}};
  EXPECT_TRUE(cover_frontier({kA}, x, false).empty());
  EXPECT_EQ(cover_frontier({kA}, x, true), std::vector<Assignment>{kEmpty});
}

TEST(CoverFrontier, MatchesCoverPredicate) {
  // Reference: y is in the frontier iff y is outside Q and removing one of
  // its pairs lands in Q.
  std::mt19937_64 rng(23);
  SubsetPosetSpec spec{{0, 1, 2}, {1, 2}};
  const auto all = all_supports(spec);
  for (int round = 0; round < 200; ++round) {
    std::vector<Assignment> q;
    for (const auto& a : all) {
      if (coin(rng, 1, 3)) q.push_back(a);
    }
    std::vector<Assignment> want;
    for (const auto& y : all) {
      if (std::find(q.begin(), q.end(), y) != q.end()) continue;
      bool covers = false;
      for (const auto& x : q) covers = covers || (x.subset_of(y) && x.size() + 1 == y.size());
      if (covers) want.push_back(y);
    }
    EXPECT_EQ(cover_frontier(q, spec, false), want);
  }
}

TEST(CoverFrontier, ElementOutsideAmbient) {
  SubsetPosetSpec x{{0}, {1}};
  EXPECT_THROW(cover_frontier({kB}, x, false), UsageError);
}

TEST(MaximalElements, Examples) {
  auto leq = [](const Assignment& a, const Assignment& b) { return a.subset_of(b); };
  EXPECT_EQ(maximal_elements(std::vector<Assignment>{kEmpty, kA, kAB}, leq), std::vector<Assignment>{kAB});
  EXPECT_EQ(maximal_elements(std::vector<Assignment>{kA, kB}, leq), (std::vector<Assignment>{kA, kB}));
  EXPECT_TRUE(maximal_elements(std::vector<Assignment>{}, leq).empty());
}

TEST(UnitSum, Examples) {
  EXPECT_EQ(unit_sum_solution({kA, kAB}), (IntegerWeighting{1, 0}));
  EXPECT_EQ(unit_sum_solution({kA, kB}), (IntegerWeighting{1, 1}));
  EXPECT_EQ(unit_sum_solution({kAB, kA, kB}), (IntegerWeighting{-1, 1, 1}));  // aligned with the input order
}

TEST(UnitSum, AgreesWithInversionBelowArtificialMinimum) {
  // Extend H by a new bottom element carrying g = 0 there and g = 1 on H;
  // inverting gives f on H.
  std::mt19937_64 rng(29);
  SubsetPosetSpec spec{{0, 1, 2, 3}, {1}};
  const auto all = all_supports(spec);
  for (int round = 0; round < 200; ++round) {
    std::vector<Assignment> h;
    for (std::size_t i = 1; i < all.size(); ++i) {
      if (coin(rng, 1, 3)) h.push_back(all[i]);
    }
    std::vector<Assignment> extended{kEmpty};
    extended.insert(extended.end(), h.begin(), h.end());
    auto p = subset_poset(extended);
    IntegerWeighting g(extended.size(), 1);
    g[0] = 0;
    const auto f = invert(p, g);
    const auto direct = unit_sum_solution(h);
    for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(direct[i], f[i + 1]);
  }
}
