#pragma once

// Finite posets: Möbius function, zeta accumulation and Möbius inversion,
// cover frontiers and maximal elements, and the unit-sum weighting used by
// the verification tables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "w1/checked.hpp"
#include "w1/error.hpp"
#include "w1/instance.hpp"

namespace w1 {

/// Weights indexed like the elements of the poset they live on.
using IntegerWeighting = std::vector<std::int64_t>;

template <class T>
class FinitePoset {
 public:
  using Leq = std::function<bool(const T&, const T&)>;

  FinitePoset(std::vector<T> elements, Leq leq) : elements_(std::move(elements)), leq_(std::move(leq)) {
    // A strict predecessor has strictly fewer elements below it, so sorting
    // by down-set size yields a linear extension.
    std::vector<std::size_t> below(elements_.size(), 0);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t j = 0; j < elements_.size(); ++j) below[i] += this->leq(j, i) ? 1 : 0;
    }
    order_.resize(elements_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  }

  const std::vector<T>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool leq(std::size_t i, std::size_t j) const { return leq_(elements_[i], elements_[j]); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  /// Element indices in a linear extension of the order.
  const std::vector<std::size_t>& linear_extension() const noexcept { return order_; }

  std::optional<std::size_t> index_of(const T& x) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i] == x) return i;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> minimum() const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      bool all = true;
      for (std::size_t j = 0; j < elements_.size() && all; ++j) all = leq(i, j);
      if (all) return i;
    }
    return std::nullopt;
  }

  /// Exhaustive check of reflexivity, antisymmetry and transitivity.
  bool satisfies_order_axioms() const {
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq(a, a)) return false;
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq(a, b) && leq(b, a)) return false;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq(a, b) && leq(b, c) && !leq(a, c)) return false;
        }
      }
    }
    return true;
  }

 private:
  std::vector<T> elements_;
  Leq leq_;
  std::vector<std::size_t> order_;
};

/// Möbius function of one poset, memoized per lower argument.
template <class T>
class Mobius {
 public:
  explicit Mobius(const FinitePoset<T>& poset) : poset_(poset), rows_(poset.size()) {}

  std::int64_t operator()(std::size_t x, std::size_t y) {
    if (x >= poset_.size() || y >= poset_.size()) throw UsageError("mobius: element not in poset");
    return row(x)[y];
  }

  std::int64_t operator()(const T& x, const T& y) {
    auto xi = poset_.index_of(x);
    auto yi = poset_.index_of(y);
    if (!xi || !yi) throw UsageError("mobius: element not in poset");
    return (*this)(*xi, *yi);
  }

 private:
  const std::vector<std::int64_t>& row(std::size_t x) {
    auto& r = rows_[x];
    if (r) return *r;
    std::vector<std::int64_t> mu(poset_.size(), 0);
    mu[x] = 1;
    // mu(x, y) = -sum_{x <= z < y} mu(x, z), walking y in a linear extension.
    for (std::size_t y : poset_.linear_extension()) {
      if (y == x || !poset_.leq(x, y)) continue;
      std::int64_t sum = 0;
      for (std::size_t z = 0; z < poset_.size(); ++z) {
        if (poset_.leq(x, z) && poset_.less(z, y)) sum = checked_add(sum, mu[z]);
      }
      mu[y] = checked_sub(0, sum);
    }
    r = std::move(mu);
    return *r;
  }

  const FinitePoset<T>& poset_;
  std::vector<std::optional<std::vector<std::int64_t>>> rows_;
};

template <class T>
std::int64_t mobius(const FinitePoset<T>& poset, const T& x, const T& y) {
  return Mobius<T>(poset)(x, y);
}

/// g(x) = sum over y <= x of f(y).
template <class T>
IntegerWeighting accumulate(const FinitePoset<T>& poset, const IntegerWeighting& f) {
  if (f.size() != poset.size()) throw UsageError("accumulate: weighting is not total on the poset");
  IntegerWeighting g(poset.size(), 0);
  for (std::size_t x = 0; x < poset.size(); ++x) {
    for (std::size_t y = 0; y < poset.size(); ++y) {
      if (poset.leq(y, x)) g[x] = checked_add(g[x], f[y]);
    }
  }
  return g;
}

/// f(x) = sum over y <= x of g(y) mu(y, x). Requires a minimum element.
template <class T>
IntegerWeighting invert(const FinitePoset<T>& poset, const IntegerWeighting& g) {
  if (g.size() != poset.size()) throw UsageError("invert: weighting is not total on the poset");
  if (poset.size() > 0 && !poset.minimum()) throw UsageError("invert: poset has no minimum element");
  Mobius<T> mu(poset);
  IntegerWeighting f(poset.size(), 0);
  for (std::size_t x = 0; x < poset.size(); ++x) {
    for (std::size_t y = 0; y < poset.size(); ++y) {
      if (poset.leq(y, x)) f[x] = checked_add(f[x], checked_mul(g[y], mu(y, x)));
    }
  }
  return f;
}

/// Elements of `family` with no strictly larger element in `family`.
template <class T, class Leq>
std::vector<T> maximal_elements(const std::vector<T>& family, Leq leq) {
  std::vector<T> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < family.size() && !dominated; ++j) {
      dominated = !(family[j] == family[i]) && leq(family[i], family[j]);
    }
    if (!dominated) out.push_back(family[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subset posets of supports

/// The ambient poset P_S: every support over the variables of `vars` using
/// values from `nonzero_values`, ordered by inclusion.
struct SubsetPosetSpec {
  VarSet vars;
  std::vector<ValueId> nonzero_values;

  bool contains(const Assignment& a) const;
};

/// Every element of the ambient poset, sorted by SizeLexLess. Size is
/// (|values| + 1)^|vars|; intended for small ambient posets and tests.
std::vector<Assignment> all_supports(const SubsetPosetSpec& ambient);

/// Inclusion poset on a family of supports.
FinitePoset<Assignment> subset_poset(std::vector<Assignment> family);

/// Elements of the ambient poset outside Q that cover some member of Q
/// (one extra pair on an unassigned variable). With `patch_empty`, the
/// empty support is added whenever it is not in Q. Sorted by SizeLexLess.
std::vector<Assignment> cover_frontier(const std::vector<Assignment>& q, const SubsetPosetSpec& ambient,
                                       bool patch_empty);

/// The weighting f on H with sum_{W in H, W ⊆ U} f(W) = 1 for every U in H,
/// by the forced recursion in size-ascending order. Aligned with `h`.
/// Throws OverflowError on 64-bit overflow.
IntegerWeighting unit_sum_solution(const std::vector<Assignment>& h);

}  // namespace w1
