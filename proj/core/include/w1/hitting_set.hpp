#pragma once

// Family-of-hypergraphs hitting: find S ⊆ W with |S| = k and S ∩ V_i ∈ E_i
// for every hypergraph i. Solved by reduction to a Boolean CSP whose
// relations list the characteristic vectors of the allowed edges.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "w1/instance.hpp"
#include "w1/verifier.hpp"

namespace w1 {

struct Hypergraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
};

struct HypergraphFamilyInstance {
  std::vector<std::string> ground;
  std::vector<Hypergraph> hypergraphs;
  std::int64_t k = 0;
};

/// Throws ParseError (Invariant) if an edge leaves its vertex set, a vertex
/// set leaves the ground set, or labels repeat.
void validate(const HypergraphFamilyInstance& h);

/// {"ground": [...], "hypergraphs": [{"vertices": [...], "edges": [[...]]}], "k": int}
HypergraphFamilyInstance parse_hypergraph_family(std::string_view text);

/// Boolean CSP over the ground set with one constraint per hypergraph on
/// its vertices in ground order. A hypergraph with no vertices contributes
/// nothing when it allows the empty edge and an always-false constraint
/// otherwise.
CspInstance reduce(const HypergraphFamilyInstance& h);

/// Ground-set names of a hitting set, in ground order.
using HittingSet = std::vector<std::string>;

std::optional<HittingSet> solve_hitting(const HypergraphFamilyInstance& h, const SolveOptions& options = {});

/// Checks S ∩ V_i ∈ E_i over every k-subset of the ground set directly.
std::optional<HittingSet> oracle_hitting(const HypergraphFamilyInstance& h);

}  // namespace w1
