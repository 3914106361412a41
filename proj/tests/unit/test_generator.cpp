#include <gtest/gtest.h>

#include <random>

#include "w1/generator.hpp"
#include "w1/verifier.hpp"

using namespace w1;

TEST(Generator, SeedDeterminesOutput) {
  GeneratorConfig g;
  g.seed = 7;
  g.weights = true;
  g.target = true;
  const auto a = serialize_instance(random_instance(g));
  EXPECT_EQ(serialize_instance(random_instance(g)), a);
  g.seed = 8;
  EXPECT_NE(serialize_instance(random_instance(g)), a);
}

TEST(Generator, PlantedInstancesAreSatisfiable) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GeneratorConfig g;
    g.seed = seed;
    g.variables = 6;
    g.constraints = 5;
    g.density = 0.1;
    g.k = 2;
    g.plant = true;
    EXPECT_TRUE(oracle_solve(random_instance(g)).has_value()) << "seed " << seed;
  }
}

TEST(Generator, DrawStaysInRange) {
  std::mt19937_64 rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = draw(rng, 3, 9);
    ASSERT_GE(x, 3u);
    ASSERT_LE(x, 9u);
    ++hits[x - 3];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_EQ(draw(rng, 4, 4), 4u);
}

TEST(Generator, DrawSequenceIsFixed) {
  // Pinned so that generated corpora stay identical across platforms.
  std::mt19937_64 rng(42);
  std::vector<std::uint64_t> got;
  for (int i = 0; i < 4; ++i) got.push_back(draw(rng, 0, 99));
  std::mt19937_64 ref(42);
  std::vector<std::uint64_t> want;
  for (int i = 0; i < 4; ++i) want.push_back(ref() % 100);  // no rejections this early for range 100
  EXPECT_EQ(got, want);
}

TEST(Generator, HypergraphFamiliesValidate) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    HypergraphConfig h;
    h.ground = static_cast<unsigned>(draw(rng, 1, 6));
    h.k = static_cast<unsigned>(draw(rng, 0, h.ground));
    EXPECT_NO_THROW(validate(random_hypergraph_family(h, rng)));
  }
}

TEST(Generator, RejectsBadConfig) {
  GeneratorConfig g;
  g.variables = 2;
  g.k = 3;
  EXPECT_THROW(random_instance(g), Error);
  g.k = 1;
  g.domain = 1;
  EXPECT_THROW(random_instance(g), Error);
}

TEST(PathCover, ShapeAndSolution) {
  const auto inst = path_cover_instance(10);
  EXPECT_EQ(inst.constraints().size(), 9u);
  EXPECT_EQ(inst.k(), 2u);
  EXPECT_FALSE(oracle_solve(inst).has_value());  // 9 edges cannot be covered by 2 vertices
  EXPECT_TRUE(oracle_solve(path_cover_instance(4)).has_value());
}
