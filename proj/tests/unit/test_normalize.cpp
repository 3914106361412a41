#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "w1/generator.hpp"
#include "w1/normalize.hpp"
#include "w1/poset.hpp"

using namespace w1;
using w1::testing::boolean_instance;
using w1::testing::support;

namespace {

/// Reference block: every assignment of S (all |D|^|S| of them) of size at
/// most k that satisfies each listed constraint.
std::vector<Assignment> brute_block(const CspInstance& inst, const SatSet& block, unsigned k) {
  std::vector<Assignment> out;
  const std::size_t d = inst.domain().size();
  std::vector<std::size_t> digit(block.vars.size(), 0);
  while (true) {
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < digit.size(); ++i) {
      const auto value = static_cast<ValueId>(digit[i]);
      if (value != inst.free_value()) pairs.push_back({block.vars[i], value});
    }
    Assignment a(pairs);
    bool ok = a.size() <= k;
    for (std::size_t c : block.constraints) ok = ok && satisfies(a, inst.constraints()[c], inst);
    if (ok) out.push_back(a);
    std::size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == d) digit[pos++] = 0;
    if (pos == digit.size()) break;
  }
  std::sort(out.begin(), out.end(), SizeLexLess{});
  return out;
}

}  // namespace

TEST(Normalize, BinaryBlock) {
  auto inst = boolean_instance(R"("variables": ["x", "y"],
      "relations": {"R": {"arity": 2, "tuples": [["1", "0"], ["1", "1"]]}},
      "constraints": [{"relation": "R", "vars": ["x", "y"]}], "k": 2)");
  auto n = normalize(inst);
  ASSERT_EQ(n.blocks().size(), 1u);
  EXPECT_EQ(n.blocks()[0].members, (std::vector<Assignment>{support(inst, "x=1"), support(inst, "x=1,y=1")}));
}

TEST(Normalize, RepetitionDropsInconsistentTuples) {
  auto inst = boolean_instance(R"("variables": ["x"],
      "relations": {"R": {"arity": 2, "tuples": [["1", "0"]]}},
      "constraints": [{"relation": "R", "vars": ["x", "x"]}], "k": 1)");
  auto n = normalize(inst);
  ASSERT_EQ(n.blocks().size(), 1u);
  EXPECT_EQ(n.blocks()[0].vars, VarSet{0});
  EXPECT_TRUE(n.blocks()[0].members.empty());
}

TEST(Normalize, SameVariableSetIntersects) {
  auto inst = boolean_instance(R"("variables": ["x", "y"],
      "relations": {"R1": {"arity": 2, "tuples": [["1", "0"], ["1", "1"], ["0", "0"]]},
                    "R2": {"arity": 2, "tuples": [["1", "1"], ["0", "1"], ["0", "0"]]}},
      "constraints": [{"relation": "R1", "vars": ["x", "y"]}, {"relation": "R2", "vars": ["y", "x"]}], "k": 2)");
  auto n = normalize(inst);
  ASSERT_EQ(n.blocks().size(), 1u);
  // R1(x,y) allows {x}, {x,y}, {}; R2(y,x) allows {y,x}, {x}, {}.
  EXPECT_EQ(n.blocks()[0].members,
            (std::vector<Assignment>{support(inst, "{}"), support(inst, "x=1"), support(inst, "x=1,y=1")}));
}

TEST(SatSet, SizeFilter) {
  auto inst = boolean_instance(R"("variables": ["x"], "relations": {"R": {"arity": 1, "tuples": [["1"]]}},
      "constraints": [{"relation": "R", "vars": ["x"]}], "k": 1)");
  const std::size_t idx[] = {0};
  EXPECT_EQ(sat_set(inst, {0}, idx, 1).members, std::vector<Assignment>{support(inst, "x=1")});
  EXPECT_TRUE(sat_set(inst, {0}, idx, 0).members.empty());
}

TEST(SatSet, EmptyIntersection) {
  auto inst = boolean_instance(R"("variables": ["x", "y"],
      "relations": {"R1": {"arity": 2, "tuples": [["1", "0"]]}, "R2": {"arity": 2, "tuples": [["1", "1"]]}},
      "constraints": [{"relation": "R1", "vars": ["x", "y"]}, {"relation": "R2", "vars": ["x", "y"]}], "k": 2)");
  const std::size_t idx[] = {0, 1};
  EXPECT_TRUE(sat_set(inst, {0, 1}, idx, 2).members.empty());
}

TEST(Normalize, MatchesFullEnumerationAndPreservesSolutions) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    GeneratorConfig g;
    g.variables = static_cast<unsigned>(draw(rng, 1, 4));
    g.domain = static_cast<unsigned>(draw(rng, 2, 3));
    g.constraints = static_cast<unsigned>(draw(rng, 1, 4));
    g.max_arity = 4;
    g.density = 0.5;
    g.k = static_cast<unsigned>(draw(rng, 0, g.variables));
    const auto inst = CspInstance::from_spec(random_instance_spec(g, rng));
    const auto n = normalize(inst);
    for (const auto& block : n.blocks()) {
      EXPECT_EQ(block.members, brute_block(inst, block, inst.k()));
      EXPECT_LE(block.members.size(), block.listed_tuples);
    }
    // Every support of size <= k: satisfies the source iff accepted blockwise.
    SubsetPosetSpec all_spec;
    for (VarId v = 0; v < g.variables; ++v) all_spec.vars.push_back(v);
    all_spec.nonzero_values = inst.nonzero_values();
    for (const auto& b : all_supports(all_spec)) {
      if (b.size() > inst.k()) continue;
      EXPECT_EQ(satisfies_all(b, inst), n.accepts(b));
    }
  }
}
