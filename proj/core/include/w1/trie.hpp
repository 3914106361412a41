#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "w1/instance.hpp"

namespace w1 {

/// Edge label: a (variable, value) pair packed as var << 32 | value.
using TrieSymbol = std::uint64_t;

/// Reserved symbol joining the two halves of a pair key.
inline constexpr TrieSymbol kTrieSeparator = std::numeric_limits<TrieSymbol>::max();

inline TrieSymbol pack_symbol(Pair p) noexcept { return (TrieSymbol{p.var} << 32) | p.value; }
inline Pair unpack_symbol(TrieSymbol s) noexcept {
  return {static_cast<VarId>(s >> 32), static_cast<ValueId>(s & 0xffffffffu)};
}

/// Key of a support: its pairs in ascending variable order.
std::vector<TrieSymbol> trie_key(const Assignment& a);
/// key(t) ++ separator ++ key(w).
std::vector<TrieSymbol> trie_key(const Assignment& t, const Assignment& w);

/// Trie over symbol strings with a signed integer payload per stored key.
/// Absent keys read as 0; a lookup visits at most |key| + 1 nodes.
class AssignmentTrie {
 public:
  struct Lookup {
    std::int64_t value = 0;
    bool stored = false;
    std::size_t nodes_touched = 0;
  };

  AssignmentTrie() : nodes_(1) {}

  void insert(std::span<const TrieSymbol> key, std::int64_t value);
  /// Adds `delta` to the payload (creating the entry at 0 first). Checked.
  void add(std::span<const TrieSymbol> key, std::int64_t delta);
  Lookup lookup(std::span<const TrieSymbol> key) const;

  std::size_t entries() const noexcept { return entries_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  /// Visits stored entries in ascending symbol order.
  void for_each(const std::function<void(const std::vector<TrieSymbol>&, std::int64_t)>& visit) const;

 private:
  struct Node {
    std::vector<std::pair<TrieSymbol, std::uint32_t>> children;  // sorted by symbol
    std::int64_t value = 0;
    bool stored = false;
  };

  std::uint32_t descend_or_create(std::span<const TrieSymbol> key);
  void walk(std::uint32_t node, std::vector<TrieSymbol>& prefix,
            const std::function<void(const std::vector<TrieSymbol>&, std::int64_t)>& visit) const;

  std::vector<Node> nodes_;
  std::size_t entries_ = 0;
};

}  // namespace w1
