#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "w1/generator.hpp"
#include "w1/normalize.hpp"
#include "w1/tables.hpp"

using namespace w1;
using w1::testing::boolean_instance;
using w1::testing::support;

namespace {

CspInstance chain_block() {
  // C_S = { {x}, {x,y} } over S = {x, y}, third variable z unconstrained.
  return boolean_instance(R"("variables": ["x", "y", "z"],
      "relations": {"R": {"arity": 2, "tuples": [["1", "0"], ["1", "1"]]}},
      "constraints": [{"relation": "R", "vars": ["x", "y"]}], "k": 2)");
}

CspInstance exactly_one() {
  return boolean_instance(R"("variables": ["x", "y"],
      "relations": {"R": {"arity": 2, "tuples": [["1", "0"], ["0", "1"]]}},
      "constraints": [{"relation": "R", "vars": ["x", "y"]}], "k": 2)");
}

}  // namespace

TEST(HSet, Examples) {
  auto inst = chain_block();
  SatSet chain;
  chain.members = {support(inst, "x=1"), support(inst, "x=1,y=1")};
  EXPECT_EQ(h_set(Assignment(), chain), chain.members);
  EXPECT_EQ(h_set(support(inst, "x=1"), chain), std::vector<Assignment>{support(inst, "x=1,y=1")});

  SatSet one;
  one.members = {support(inst, "x=1"), support(inst, "y=1")};
  EXPECT_TRUE(h_set(support(inst, "x=1,y=1"), one).empty());
}

TEST(BuildTables, ChainBlock) {
  auto inst = chain_block();
  auto tables = build_tables(normalize(inst));
  ASSERT_EQ(tables.frontier().size(), 1u);
  EXPECT_EQ(tables.frontier()[0].support, Assignment());
  EXPECT_EQ(tables.d(Assignment()), 1);
  EXPECT_EQ(tables.l(Assignment(), support(inst, "x=1")), 1);
  EXPECT_EQ(tables.l(Assignment(), support(inst, "x=1,y=1")), 0);
  EXPECT_TRUE(tables.l_trie().lookup(trie_key(Assignment(), support(inst, "x=1,y=1"))).stored);
}

TEST(BuildTables, ExactlyOne) {
  auto inst = exactly_one();
  auto tables = build_tables(normalize(inst));
  std::vector<Assignment> frontier;
  for (const auto& e : tables.frontier()) frontier.push_back(e.support);
  EXPECT_EQ(frontier, (std::vector<Assignment>{Assignment(), support(inst, "x=1,y=1")}));
  EXPECT_EQ(tables.d(Assignment()), 1);
  EXPECT_EQ(tables.d(support(inst, "x=1,y=1")), 1);
  EXPECT_EQ(tables.l(Assignment(), support(inst, "x=1")), 1);
  EXPECT_EQ(tables.l(Assignment(), support(inst, "y=1")), 1);
  // Nothing stored under T = {x, y}.
  std::size_t under_xy = 0;
  const auto prefix = trie_key(support(inst, "x=1,y=1"));
  tables.l_trie().for_each([&](const std::vector<TrieSymbol>& key, std::int64_t) {
    if (key.size() > prefix.size() && std::equal(prefix.begin(), prefix.end(), key.begin()) &&
        key[prefix.size()] == kTrieSeparator) {
      ++under_xy;
    }
  });
  EXPECT_EQ(under_xy, 0u);
}

TEST(BuildTables, SharedFrontierElementSumsBlocks) {
  // Two identical unary blocks on x and y; both frontiers contain the
  // empty support.
  auto inst = boolean_instance(R"("variables": ["x", "y"],
      "relations": {"R": {"arity": 1, "tuples": [["1"]]}},
      "constraints": [{"relation": "R", "vars": ["x"]}, {"relation": "R", "vars": ["y"]}], "k": 2)");
  auto n = normalize(inst);
  auto tables = build_tables(n);
  EXPECT_EQ(tables.d(Assignment()), 2);
  // Per-block sums: each block contributes f = 1 to its own member only.
  std::int64_t per_block_x = 0;
  for (const auto& bt : tables.blocks()) {
    for (const auto& ww : bt.witness_weights) {
      for (std::size_t i = 0; i < ww.witnesses.size(); ++i) {
        if (ww.frontier.empty() && ww.witnesses[i] == support(inst, "x=1")) per_block_x += ww.weights[i];
      }
    }
  }
  EXPECT_EQ(tables.l(Assignment(), support(inst, "x=1")), per_block_x);
  EXPECT_EQ(tables.l(Assignment(), support(inst, "x=1")), 1);
}

TEST(BuildTables, UnsatisfiableBlockKeepsEmptyWitnessSet) {
  auto inst = boolean_instance(R"("variables": ["x"],
      "relations": {"R": {"arity": 1, "tuples": []}},
      "constraints": [{"relation": "R", "vars": ["x"]}], "k": 1)");
  auto tables = build_tables(normalize(inst));
  EXPECT_EQ(tables.d(Assignment()), 1);
  ASSERT_EQ(tables.blocks().size(), 1u);
  ASSERT_EQ(tables.blocks()[0].witness_weights.size(), 1u);
  EXPECT_TRUE(tables.blocks()[0].witness_weights[0].witnesses.empty());
}

TEST(BuildTables, PruneDropsOversizedFrontier) {
  auto inst = exactly_one().with_k(1);
  TableOptions prune;
  prune.prune_oversized = true;
  auto pruned = build_tables(normalize(inst), prune);
  auto full = build_tables(normalize(inst));
  EXPECT_LT(pruned.frontier().size(), full.frontier().size());
  for (const auto& e : pruned.frontier()) EXPECT_LE(e.support.size(), 1u);
}

TEST(BuildTables, InvariantsOnRandomInstances) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 200; ++round) {
    GeneratorConfig g;
    g.variables = static_cast<unsigned>(draw(rng, 1, 6));
    g.domain = static_cast<unsigned>(draw(rng, 2, 3));
    g.constraints = static_cast<unsigned>(draw(rng, 1, 4));
    g.max_arity = 3;
    g.density = 0.4;
    g.k = static_cast<unsigned>(draw(rng, 0, std::min(3u, g.variables)));
    g.plant = coin(rng, 1, 2);
    const auto inst = CspInstance::from_spec(random_instance_spec(g, rng));
    const auto n = normalize(inst);
    const auto tables = build_tables(n);

    // d[T] = |I_T| >= 1 and l[T, W] = sum over I_T of f_{T,S}(W).
    std::map<std::pair<Assignment, Assignment>, std::int64_t> l_ref;
    for (const auto& e : tables.frontier()) {
      EXPECT_GE(tables.d(e.support), 1);
      EXPECT_EQ(tables.d(e.support), static_cast<std::int64_t>(e.blocks.size()));
      EXPECT_LE(e.support.size(), inst.k() + 1);
    }
    for (const auto& bt : tables.blocks()) {
      for (const auto& ww : bt.witness_weights) {
        EXPECT_EQ(ww.witnesses, h_set(ww.frontier, n.blocks()[bt.block]));
        for (std::size_t i = 0; i < ww.witnesses.size(); ++i) l_ref[{ww.frontier, ww.witnesses[i]}] += ww.weights[i];
      }
    }
    for (const auto& [key, value] : l_ref) EXPECT_EQ(tables.l(key.first, key.second), value);
    EXPECT_EQ(tables.l_trie().entries(), l_ref.size());
  }
}

TEST(BuildTables, DeterministicAndParallelAgree) {
  GeneratorConfig g;
  g.variables = 8;
  g.constraints = 10;
  g.k = 3;
  g.seed = 77;
  const auto inst = random_instance(g);
  const auto n = normalize(inst);
  TableOptions par;
  par.jobs = 4;
  const auto a = dump_tables(build_tables(n), inst);
  EXPECT_EQ(dump_tables(build_tables(n), inst), a);
  EXPECT_EQ(dump_tables(build_tables(n, par), inst), a);
}

TEST(DumpTables, Format) {
  auto inst = chain_block();
  EXPECT_EQ(dump_tables(build_tables(normalize(inst)), inst),
            "d {} 1\n"
            "l {} | x=1 1\n"
            "l {} | x=1,y=1 0\n");
}

TEST(DumpSatsets, IsAnInstanceDocumentFragment) {
  auto inst = chain_block();
  const auto text = dump_satsets(normalize(inst));
  EXPECT_NE(text.find("\"relations\""), std::string::npos);
  EXPECT_NE(text.find("\"constraints\""), std::string::npos);
}
