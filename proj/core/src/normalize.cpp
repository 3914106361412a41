#include "w1/normalize.hpp"

#include <algorithm>
#include <utility>

#include "w1/error.hpp"

namespace w1 {

bool SatSet::contains(const Assignment& a) const {
  return std::binary_search(members.begin(), members.end(), a, SizeLexLess{});
}

NormalizedInstance::NormalizedInstance(std::shared_ptr<const CspInstance> source, std::vector<SatSet> blocks,
                                       unsigned k)
    : source_(std::move(source)), blocks_(std::move(blocks)), k_(k) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (!by_vars_.emplace(blocks_[i].vars, i).second) throw InternalError("two blocks share a variable set");
  }
}

const SatSet* NormalizedInstance::find(const VarSet& vars) const {
  auto it = by_vars_.find(vars);
  return it == by_vars_.end() ? nullptr : &blocks_[it->second];
}

bool NormalizedInstance::accepts(const Assignment& b) const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [&](const SatSet& s) { return s.contains(restrict(b, s.vars)); });
}

namespace {

// The support induced by reading `tuple` along `args`, or nothing when a
// repeated variable would need two different values.
std::optional<Assignment> induced_support(std::span<const VarId> args, std::span<const ValueId> tuple,
                                          ValueId free_value) {
  std::vector<std::pair<VarId, ValueId>> seen;
  seen.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == args[i]; });
    if (it != seen.end()) {
      if (it->second != tuple[i]) return std::nullopt;
      continue;
    }
    seen.emplace_back(args[i], tuple[i]);
  }
  std::vector<Pair> pairs;
  for (const auto& [var, value] : seen) {
    if (value != free_value) pairs.push_back({var, value});
  }
  return Assignment(std::move(pairs));
}

}  // namespace

SatSet sat_set(const CspInstance& inst, const VarSet& vars, std::span<const std::size_t> constraint_indices,
               unsigned k) {
  SatSet out;
  out.vars = vars;
  out.constraints.assign(constraint_indices.begin(), constraint_indices.end());
  if (constraint_indices.empty()) return out;

  const auto& cons = inst.constraints();
  for (std::size_t ci : constraint_indices) {
    if (inst.scope(cons.at(ci)) != vars) throw UsageError("sat_set: constraint scope differs from block");
    out.listed_tuples += inst.relation_of(cons[ci]).tuples().size();
  }

  // Any member must come from a tuple of every constraint, so the shortest
  // tuple list is enough to generate candidates.
  std::size_t seed = *std::min_element(constraint_indices.begin(), constraint_indices.end(),
                                       [&](std::size_t a, std::size_t b) {
                                         return inst.relation_of(cons[a]).tuples().size() <
                                                inst.relation_of(cons[b]).tuples().size();
                                       });
  const Constraint& seed_c = cons[seed];
  for (const auto& tuple : inst.relation_of(seed_c).tuples()) {
    auto cand = induced_support(seed_c.vars, tuple, inst.free_value());
    if (!cand || cand->size() > k) continue;
    bool ok = std::all_of(constraint_indices.begin(), constraint_indices.end(),
                          [&](std::size_t ci) { return satisfies(*cand, cons[ci], inst); });
    if (ok) out.members.push_back(std::move(*cand));
  }
  std::sort(out.members.begin(), out.members.end(), SizeLexLess{});
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

NormalizedInstance normalize(std::shared_ptr<const CspInstance> inst, std::optional<unsigned> k) {
  const unsigned bound = k.value_or(inst->k());
  std::map<VarSet, std::vector<std::size_t>> groups;
  for (std::size_t ci = 0; ci < inst->constraints().size(); ++ci) {
    groups[inst->scope(inst->constraints()[ci])].push_back(ci);
  }
  std::vector<SatSet> blocks;
  blocks.reserve(groups.size());
  for (const auto& [vars, members] : groups) blocks.push_back(sat_set(*inst, vars, members, bound));
  return NormalizedInstance(std::move(inst), std::move(blocks), bound);
}

NormalizedInstance normalize(const CspInstance& inst, std::optional<unsigned> k) {
  return normalize(std::make_shared<const CspInstance>(inst), k);
}

}  // namespace w1
