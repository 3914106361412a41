#include "w1/poset.hpp"

#include <set>

namespace w1 {

bool SubsetPosetSpec::contains(const Assignment& a) const {
  for (const Pair& p : a.pairs()) {
    if (!std::binary_search(vars.begin(), vars.end(), p.var)) return false;
    if (std::find(nonzero_values.begin(), nonzero_values.end(), p.value) == nonzero_values.end()) return false;
  }
  return true;
}

std::vector<Assignment> all_supports(const SubsetPosetSpec& ambient) {
  std::vector<Assignment> out{Assignment()};
  for (VarId v : ambient.vars) {
    const std::size_t before = out.size();
    for (std::size_t i = 0; i < before; ++i) {
      for (ValueId d : ambient.nonzero_values) out.push_back(out[i].with({v, d}));
    }
  }
  std::sort(out.begin(), out.end(), SizeLexLess{});
  return out;
}

FinitePoset<Assignment> subset_poset(std::vector<Assignment> family) {
  return FinitePoset<Assignment>(std::move(family),
                                 [](const Assignment& a, const Assignment& b) { return a.subset_of(b); });
}

std::vector<Assignment> cover_frontier(const std::vector<Assignment>& q, const SubsetPosetSpec& ambient,
                                       bool patch_empty) {
  std::set<Assignment, SizeLexLess> members(q.begin(), q.end());
  std::set<Assignment, SizeLexLess> frontier;
  for (const Assignment& x : members) {
    if (!ambient.contains(x)) throw UsageError("cover_frontier: element outside the ambient poset");
    for (VarId v : ambient.vars) {
      if (x.assigns(v)) continue;
      for (ValueId d : ambient.nonzero_values) {
        Assignment y = x.with({v, d});
        if (!members.count(y)) frontier.insert(std::move(y));
      }
    }
  }
  if (patch_empty && !members.count(Assignment())) frontier.insert(Assignment());
  return {frontier.begin(), frontier.end()};
}

IntegerWeighting unit_sum_solution(const std::vector<Assignment>& h) {
  std::vector<std::size_t> order(h.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return SizeLexLess{}(h[a], h[b]); });

  IntegerWeighting f(h.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t u = order[pos];
    std::int64_t below = 0;
    // Proper subsets are strictly smaller, so they were all settled earlier.
    for (std::size_t prev = 0; prev < pos; ++prev) {
      const std::size_t w = order[prev];
      if (h[w].proper_subset_of(h[u])) below = checked_add(below, f[w]);
    }
    f[u] = checked_sub(1, below);
  }
  return f;
}

}  // namespace w1
