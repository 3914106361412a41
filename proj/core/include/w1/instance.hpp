#pragma once

// Uniform CSP instances: every relation is given by its explicit tuple list.
//
// Labels (domain values, variable names) are mapped to dense indices in
// declaration order. The variable declaration order is the global total
// order used to canonicalize variable sets and assignment supports.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "w1/bigint.hpp"

namespace w1 {

using VarId = std::uint32_t;
using ValueId = std::uint32_t;

/// Sorted, duplicate-free list of variable indices.
using VarSet = std::vector<VarId>;

/// One (variable, non-free value) pair of a support.
struct Pair {
  VarId var = 0;
  ValueId value = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// An assignment in support representation: the pairs whose value differs
/// from the free value. Pairs are kept sorted by variable index; a variable
/// occurs at most once. Absent variables read as the free value.
class Assignment {
 public:
  Assignment() = default;

  /// Sorts `pairs`; throws UsageError if a variable occurs twice.
  explicit Assignment(std::vector<Pair> pairs);

  std::span<const Pair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  std::optional<ValueId> value_of(VarId var) const noexcept;
  bool assigns(VarId var) const noexcept { return value_of(var).has_value(); }

  bool subset_of(const Assignment& other) const noexcept;
  bool proper_subset_of(const Assignment& other) const noexcept {
    return size() < other.size() && subset_of(other);
  }

  /// Copy with one more pair. `p.var` must not be assigned yet.
  Assignment with(Pair p) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment& a, const Assignment& b) { return a.pairs_ <=> b.pairs_; }

 private:
  std::vector<Pair> pairs_;
};

/// Orders supports by size first, then lexicographically by (variable, value).
struct SizeLexLess {
  bool operator()(const Assignment& a, const Assignment& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Support restricted to the variables of `vars` (which must be sorted).
Assignment restrict(const Assignment& a, const VarSet& vars);

class Relation {
 public:
  Relation(std::string name, std::size_t arity, std::vector<std::vector<ValueId>> tuples);

  const std::string& name() const noexcept { return name_; }
  std::size_t arity() const noexcept { return arity_; }
  /// Deduplicated tuples in first-occurrence order.
  const std::vector<std::vector<ValueId>>& tuples() const noexcept { return tuples_; }
  bool contains(std::span<const ValueId> tuple) const;

 private:
  std::string name_;
  std::size_t arity_;
  std::vector<std::vector<ValueId>> tuples_;
  std::set<std::vector<ValueId>> index_;
};

struct Constraint {
  std::size_t relation = 0;
  /// Argument list; repetitions allowed.
  std::vector<VarId> vars;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Label-level description, used by the document parser, the serializer and
// programmatic construction in tests and generators.
struct RelationSpec {
  std::size_t arity = 0;
  std::vector<std::vector<std::string>> tuples;
};

struct ConstraintSpec {
  std::string relation;
  std::vector<std::string> vars;
};

struct InstanceSpec {
  std::vector<std::string> domain;
  std::string free_value;
  std::vector<std::string> variables;
  std::map<std::string, RelationSpec> relations;
  std::vector<ConstraintSpec> constraints;
  std::int64_t k = 0;
  std::optional<std::map<std::string, std::string>> weights;
  std::optional<std::string> target;
  std::optional<std::int64_t> f_of_k;
};

/// Validated, immutable uniform CSP instance.
class CspInstance {
 public:
  /// Validates `spec` and indexes its labels. Throws ParseError (Schema for
  /// dangling references, Invariant for everything else) on violation.
  static CspInstance from_spec(const InstanceSpec& spec);

  const std::vector<std::string>& domain() const noexcept { return domain_; }
  ValueId free_value() const noexcept { return free_value_; }
  /// Domain indices other than the free value, ascending.
  const std::vector<ValueId>& nonzero_values() const noexcept { return nonzero_values_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  unsigned k() const noexcept { return k_; }

  /// Per-variable weights, present iff the document carried "weights".
  /// Variables missing from the weight map have no entry here.
  const std::optional<std::map<VarId, BigInt>>& weights() const noexcept { return weights_; }
  const std::optional<BigInt>& target() const noexcept { return target_; }
  const std::optional<unsigned>& f_of_k() const noexcept { return f_of_k_; }

  /// Non-fatal diagnostics collected at construction (duplicate tuples).
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  std::optional<VarId> find_variable(std::string_view name) const;
  std::optional<ValueId> find_value(std::string_view label) const;
  const Relation& relation_of(const Constraint& c) const { return relations_.at(c.relation); }

  /// Exact variable set of a constraint (repetitions collapsed, sorted).
  VarSet scope(const Constraint& c) const;

  /// Rough input size: labels plus listed tuple entries plus constraint arguments.
  std::size_t input_size() const noexcept;

  /// Same instance with a different parameter.
  CspInstance with_k(unsigned k) const;

  InstanceSpec to_spec() const;

 private:
  CspInstance() = default;

  std::vector<std::string> domain_;
  ValueId free_value_ = 0;
  std::vector<ValueId> nonzero_values_;
  std::vector<std::string> variables_;
  std::vector<Relation> relations_;
  std::vector<Constraint> constraints_;
  unsigned k_ = 0;
  std::optional<std::map<VarId, BigInt>> weights_;
  std::optional<BigInt> target_;
  std::optional<unsigned> f_of_k_;
  std::vector<std::string> warnings_;
};

/// Parses the JSON instance document. Unknown fields are rejected.
CspInstance parse_instance(std::string_view text);

/// Canonical JSON rendering (sorted keys, two-space indent, trailing newline).
std::string serialize_instance(const CspInstance& inst);

/// True iff the tuple read off `c`'s argument list under `a` (free value for
/// absent variables) is listed in `c`'s relation. Throws UsageError if `a`
/// uses a value outside the domain or the free value.
bool satisfies(const Assignment& a, const Constraint& c, const CspInstance& inst);

/// True iff `a` satisfies every constraint of `inst`.
bool satisfies_all(const Assignment& a, const CspInstance& inst);

/// Throws UsageError unless every pair of `a` names a declared variable and a
/// non-free domain value.
void validate_assignment(const Assignment& a, const CspInstance& inst);

/// "x=1,z=1"; the empty support renders as "{}".
std::string format_assignment(const Assignment& a, const CspInstance& inst);

/// Inverse of format_assignment. Accepts "" or "{}" for the empty support.
/// Pairs mapping to the free value are dropped.
Assignment parse_assignment(std::string_view text, const CspInstance& inst);

}  // namespace w1
