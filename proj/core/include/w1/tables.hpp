#pragma once

// Deterministic preprocessing: per-block cover frontiers, witness sets with
// their unit-sum weightings, and the two lookup tries consulted by the
// certificate check.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "w1/normalize.hpp"
#include "w1/poset.hpp"
#include "w1/trie.hpp"

namespace w1 {

struct TableOptions {
  /// Add the empty support to every block frontier whose satisfying set
  /// lacks it. Without it, a block like {(x,1)} over S = {x} has an empty
  /// frontier and candidates ignoring x slip through the check.
  bool patch_empty = true;
  /// Drop frontier elements of size k + 1 (they can never lie below a
  /// size-k candidate).
  bool prune_oversized = false;
  unsigned jobs = 1;
};

/// One frontier element T of one block with H_{T,S} and f_{T,S}.
struct WitnessWeights {
  Assignment frontier;
  std::vector<Assignment> witnesses;  // sorted by SizeLexLess
  IntegerWeighting weights;           // aligned with `witnesses`
};

struct BlockTables {
  std::size_t block = 0;
  std::vector<Assignment> frontier;  // the block's cover frontier
  std::vector<WitnessWeights> witness_weights;
};

/// T together with I_T, the blocks whose frontier contains T.
struct FrontierEntry {
  Assignment support;
  std::vector<std::size_t> blocks;
};

struct TableStats {
  std::size_t frontier_size = 0;
  std::size_t d_entries = 0;
  std::size_t l_entries = 0;
  std::size_t trie_nodes = 0;
  std::size_t max_frontier_support = 0;
};

class VerificationTables {
 public:
  const std::vector<FrontierEntry>& frontier() const noexcept { return frontier_; }
  const std::vector<BlockTables>& blocks() const noexcept { return blocks_; }
  const AssignmentTrie& d_trie() const noexcept { return d_trie_; }
  const AssignmentTrie& l_trie() const noexcept { return l_trie_; }
  unsigned k() const noexcept { return k_; }
  const TableOptions& options() const noexcept { return options_; }
  TableStats stats() const;

  std::int64_t d(const Assignment& t) const { return d_trie_.lookup(trie_key(t)).value; }
  std::int64_t l(const Assignment& t, const Assignment& w) const { return l_trie_.lookup(trie_key(t, w)).value; }

 private:
  friend VerificationTables build_tables(const NormalizedInstance&, const TableOptions&);

  std::vector<FrontierEntry> frontier_;
  std::vector<BlockTables> blocks_;
  AssignmentTrie d_trie_;
  AssignmentTrie l_trie_;
  unsigned k_ = 0;
  TableOptions options_;
};

/// H_{T,S}: members of the satisfying set that strictly contain T.
std::vector<Assignment> h_set(const Assignment& t, const SatSet& block);

VerificationTables build_tables(const NormalizedInstance& normalized, const TableOptions& options = {});

/// `d <key> <value>` and `l <keyT> | <keyW> <value>` lines, sorted by key
/// text. Keys are comma-joined var=val pairs; the empty support is `{}`.
std::string dump_tables(const VerificationTables& tables, const CspInstance& inst);

/// Blocks rendered as instance-document relations and constraints (JSON).
std::string dump_satsets(const NormalizedInstance& normalized);

}  // namespace w1
