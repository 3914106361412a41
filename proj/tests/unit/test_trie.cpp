#include <gtest/gtest.h>

#include "w1/trie.hpp"

using namespace w1;

TEST(Trie, StoreAndFetch) {
  AssignmentTrie t;
  const Assignment a({{0, 1}, {3, 2}});
  t.insert(trie_key(a), 5);
  auto r = t.lookup(trie_key(a));
  EXPECT_EQ(r.value, 5);
  EXPECT_TRUE(r.stored);
}

TEST(Trie, AbsentKeyReadsZero) {
  AssignmentTrie t;
  t.insert(trie_key(Assignment({{0, 1}, {1, 1}})), 4);
  auto prefix = t.lookup(trie_key(Assignment({{0, 1}})));  // interior node, never stored
  EXPECT_EQ(prefix.value, 0);
  EXPECT_FALSE(prefix.stored);
  EXPECT_EQ(t.lookup(trie_key(Assignment({{2, 1}}))).value, 0);
}

TEST(Trie, EmptyKeyIsRootPayload) {
  AssignmentTrie t;
  EXPECT_FALSE(t.lookup(trie_key(Assignment())).stored);
  t.insert(trie_key(Assignment()), 3);
  EXPECT_EQ(t.lookup(trie_key(Assignment())).value, 3);
  EXPECT_EQ(t.entries(), 1u);
}

TEST(Trie, LookupTouchesAtMostKeyLengthPlusOne) {
  AssignmentTrie t;
  for (VarId v = 0; v < 6; ++v) {
    t.insert(trie_key(Assignment({{v, 1}})), 1);
    t.insert(trie_key(Assignment({{v, 1}}), Assignment({{v, 1}, {v + 1, 1}})), 2);
  }
  const Assignment probe({{1, 1}, {2, 1}});
  for (const auto& key : {trie_key(probe), trie_key(Assignment({{1, 1}}), probe), trie_key(Assignment({{9, 1}}))}) {
    EXPECT_LE(t.lookup(key).nodes_touched, key.size() + 1);
  }
  EXPECT_EQ(t.lookup(trie_key(Assignment({{1, 1}}), probe)).value, 2);
}

TEST(Trie, AddAccumulates) {
  AssignmentTrie t;
  const auto k = trie_key(Assignment(), Assignment({{0, 1}}));
  t.add(k, 2);
  t.add(k, -3);
  EXPECT_EQ(t.lookup(k).value, -1);
  EXPECT_EQ(t.entries(), 1u);
}

TEST(Trie, PairKeyUsesSeparator) {
  const Assignment t({{0, 1}});
  const Assignment w({{0, 1}, {1, 1}});
  const auto key = trie_key(t, w);
  ASSERT_EQ(key.size(), 4u);
  EXPECT_EQ(key[1], kTrieSeparator);
  EXPECT_EQ(unpack_symbol(key[3]).var, 1u);
}

TEST(Trie, ForEachVisitsInSymbolOrder) {
  AssignmentTrie t;
  t.insert(trie_key(Assignment({{2, 1}})), 1);
  t.insert(trie_key(Assignment({{0, 1}})), 2);
  t.insert(trie_key(Assignment()), 3);
  std::vector<std::int64_t> seen;
  t.for_each([&](const std::vector<TrieSymbol>&, std::int64_t v) { seen.push_back(v); });
  EXPECT_EQ(seen, (std::vector<std::int64_t>{3, 2, 1}));
}
