#include "w1/trie.hpp"

#include <algorithm>

#include "w1/checked.hpp"

namespace w1 {

std::vector<TrieSymbol> trie_key(const Assignment& a) {
  std::vector<TrieSymbol> key;
  key.reserve(a.size());
  for (const Pair& p : a.pairs()) key.push_back(pack_symbol(p));
  return key;
}

std::vector<TrieSymbol> trie_key(const Assignment& t, const Assignment& w) {
  std::vector<TrieSymbol> key = trie_key(t);
  key.push_back(kTrieSeparator);
  for (const Pair& p : w.pairs()) key.push_back(pack_symbol(p));
  return key;
}

namespace {

auto child_less = [](const std::pair<TrieSymbol, std::uint32_t>& e, TrieSymbol s) { return e.first < s; };

}  // namespace

std::uint32_t AssignmentTrie::descend_or_create(std::span<const TrieSymbol> key) {
  std::uint32_t node = 0;
  for (TrieSymbol s : key) {
    auto& kids = nodes_[node].children;
    auto it = std::lower_bound(kids.begin(), kids.end(), s, child_less);
    if (it != kids.end() && it->first == s) {
      node = it->second;
      continue;
    }
    const auto fresh = static_cast<std::uint32_t>(nodes_.size());
    kids.insert(it, {s, fresh});
    nodes_.emplace_back();  // invalidates `kids`
    node = fresh;
  }
  return node;
}

void AssignmentTrie::insert(std::span<const TrieSymbol> key, std::int64_t value) {
  Node& n = nodes_[descend_or_create(key)];
  if (!n.stored) ++entries_;
  n.stored = true;
  n.value = value;
}

void AssignmentTrie::add(std::span<const TrieSymbol> key, std::int64_t delta) {
  Node& n = nodes_[descend_or_create(key)];
  if (!n.stored) ++entries_;
  n.stored = true;
  n.value = checked_add(n.value, delta);
}

AssignmentTrie::Lookup AssignmentTrie::lookup(std::span<const TrieSymbol> key) const {
  Lookup out;
  std::uint32_t node = 0;
  out.nodes_touched = 1;
  for (TrieSymbol s : key) {
    const auto& kids = nodes_[node].children;
    auto it = std::lower_bound(kids.begin(), kids.end(), s, child_less);
    if (it == kids.end() || it->first != s) return out;
    node = it->second;
    ++out.nodes_touched;
  }
  out.stored = nodes_[node].stored;
  out.value = out.stored ? nodes_[node].value : 0;
  return out;
}

void AssignmentTrie::for_each(
    const std::function<void(const std::vector<TrieSymbol>&, std::int64_t)>& visit) const {
  std::vector<TrieSymbol> prefix;
  walk(0, prefix, visit);
}

void AssignmentTrie::walk(std::uint32_t node, std::vector<TrieSymbol>& prefix,
                          const std::function<void(const std::vector<TrieSymbol>&, std::int64_t)>& visit) const {
  if (nodes_[node].stored) visit(prefix, nodes_[node].value);
  for (const auto& [symbol, child] : nodes_[node].children) {
    prefix.push_back(symbol);
    walk(child, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace w1
