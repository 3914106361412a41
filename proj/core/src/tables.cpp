#include "w1/tables.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include <nlohmann/json.hpp>

namespace w1 {

std::vector<Assignment> h_set(const Assignment& t, const SatSet& block) {
  std::vector<Assignment> out;
  for (const Assignment& u : block.members) {
    if (t.proper_subset_of(u)) out.push_back(u);
  }
  return out;
}

TableStats VerificationTables::stats() const {
  TableStats s;
  s.frontier_size = frontier_.size();
  s.d_entries = d_trie_.entries();
  s.l_entries = l_trie_.entries();
  s.trie_nodes = d_trie_.node_count() + l_trie_.node_count();
  for (const auto& e : frontier_) s.max_frontier_support = std::max(s.max_frontier_support, e.support.size());
  return s;
}

namespace {

BlockTables build_block(const NormalizedInstance& normalized, std::size_t index, const TableOptions& options) {
  const SatSet& block = normalized.blocks()[index];
  BlockTables out;
  out.block = index;
  SubsetPosetSpec ambient{block.vars, normalized.source().nonzero_values()};
  out.frontier = cover_frontier(block.members, ambient, options.patch_empty);
  if (options.prune_oversized) {
    std::erase_if(out.frontier, [&](const Assignment& t) { return t.size() > normalized.k(); });
  }
  for (const Assignment& t : out.frontier) {
    WitnessWeights ww;
    ww.frontier = t;
    ww.witnesses = h_set(t, block);
    ww.weights = unit_sum_solution(ww.witnesses);
    out.witness_weights.push_back(std::move(ww));
  }
  return out;
}

}  // namespace

VerificationTables build_tables(const NormalizedInstance& normalized, const TableOptions& options) {
  VerificationTables tables;
  tables.k_ = normalized.k();
  tables.options_ = options;

  const std::size_t nblocks = normalized.blocks().size();
  tables.blocks_.resize(nblocks);
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(nblocks)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < nblocks; ++i) tables.blocks_[i] = build_block(normalized, i, options);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        try {
          for (std::size_t i = j; i < nblocks; i += jobs) tables.blocks_[i] = build_block(normalized, i, options);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Merge: I_T, d[T] = |I_T|, l[T,W] = sum over S in I_T of f_{T,S}(W).
  std::map<Assignment, std::vector<std::size_t>, SizeLexLess> index;
  std::map<Assignment, std::map<Assignment, std::int64_t, SizeLexLess>, SizeLexLess> l_values;
  for (const BlockTables& bt : tables.blocks_) {
    for (const WitnessWeights& ww : bt.witness_weights) {
      index[ww.frontier].push_back(bt.block);
      auto& row = l_values[ww.frontier];
      for (std::size_t i = 0; i < ww.witnesses.size(); ++i) {
        row[ww.witnesses[i]] = checked_add(row[ww.witnesses[i]], ww.weights[i]);
      }
    }
  }
  for (auto& [t, blocks] : index) {
    tables.d_trie_.insert(trie_key(t), static_cast<std::int64_t>(blocks.size()));
    tables.frontier_.push_back({t, std::move(blocks)});
  }
  for (const auto& [t, row] : l_values) {
    for (const auto& [w, value] : row) tables.l_trie_.insert(trie_key(t, w), value);
  }
  return tables;
}

namespace {

std::string render_key(std::span<const TrieSymbol> key, const CspInstance& inst) {
  if (key.empty()) return "{}";
  std::string out;
  for (TrieSymbol s : key) {
    Pair p = unpack_symbol(s);
    if (!out.empty()) out += ',';
    out += inst.variables().at(p.var) + "=" + inst.domain().at(p.value);
  }
  return out;
}

}  // namespace

std::string dump_tables(const VerificationTables& tables, const CspInstance& inst) {
  std::vector<std::pair<std::string, std::int64_t>> d_lines;
  tables.d_trie().for_each([&](const std::vector<TrieSymbol>& key, std::int64_t v) {
    d_lines.emplace_back(render_key(key, inst), v);
  });
  std::vector<std::pair<std::pair<std::string, std::string>, std::int64_t>> l_lines;
  tables.l_trie().for_each([&](const std::vector<TrieSymbol>& key, std::int64_t v) {
    auto sep = std::find(key.begin(), key.end(), kTrieSeparator);
    std::span<const TrieSymbol> t(key.data(), static_cast<std::size_t>(sep - key.begin()));
    std::span<const TrieSymbol> w(key.data() + t.size() + 1, key.size() - t.size() - 1);
    l_lines.push_back({{render_key(t, inst), render_key(w, inst)}, v});
  });
  std::sort(d_lines.begin(), d_lines.end());
  std::sort(l_lines.begin(), l_lines.end());

  std::string out;
  for (const auto& [key, v] : d_lines) out += "d " + key + " " + std::to_string(v) + "\n";
  for (const auto& [keys, v] : l_lines) {
    out += "l " + keys.first + " | " + keys.second + " " + std::to_string(v) + "\n";
  }
  return out;
}

std::string dump_satsets(const NormalizedInstance& normalized) {
  using nlohmann::json;
  const CspInstance& inst = normalized.source();
  json relations = json::object();
  json constraints = json::array();
  for (const SatSet& block : normalized.blocks()) {
    std::string name = "C";
    std::vector<std::string> vars;
    for (VarId v : block.vars) {
      name += "_" + inst.variables()[v];
      vars.push_back(inst.variables()[v]);
    }
    json tuples = json::array();
    for (const Assignment& a : block.members) {
      std::vector<std::string> row;
      for (VarId v : block.vars) row.push_back(inst.domain()[a.value_of(v).value_or(inst.free_value())]);
      tuples.push_back(row);
    }
    relations[name] = {{"arity", block.vars.size()}, {"tuples", tuples}};
    constraints.push_back({{"relation", name}, {"vars", vars}});
  }
  json doc = {{"relations", relations}, {"constraints", constraints}};
  return doc.dump(2) + "\n";
}

}  // namespace w1
