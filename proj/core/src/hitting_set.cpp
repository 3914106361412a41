#include "w1/hitting_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "w1/combinatorics.hpp"
#include "w1/error.hpp"

namespace w1 {

namespace {

[[noreturn]] void invariant(const std::string& msg) { throw ParseError(ParseError::Kind::Invariant, msg); }
[[noreturn]] void schema(const std::string& msg) { throw ParseError(ParseError::Kind::Schema, msg); }

std::map<std::string, std::size_t> ground_index(const HypergraphFamilyInstance& h) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < h.ground.size(); ++i) {
    if (!pos.emplace(h.ground[i], i).second) invariant("duplicate ground element '" + h.ground[i] + "'");
  }
  return pos;
}

// Vertex set of hypergraph i in ground order.
std::vector<std::string> ordered_vertices(const Hypergraph& g, const std::map<std::string, std::size_t>& pos) {
  std::vector<std::string> vs = g.vertices;
  std::sort(vs.begin(), vs.end(), [&](const auto& a, const auto& b) { return pos.at(a) < pos.at(b); });
  return vs;
}

}  // namespace

void validate(const HypergraphFamilyInstance& h) {
  auto pos = ground_index(h);
  if (h.k < 0) invariant("k must be nonnegative");
  for (std::size_t i = 0; i < h.hypergraphs.size(); ++i) {
    const auto& g = h.hypergraphs[i];
    std::set<std::string> vs;
    for (const auto& v : g.vertices) {
      if (!pos.count(v)) invariant("hypergraph " + std::to_string(i) + " vertex '" + v + "' is not in the ground set");
      if (!vs.insert(v).second) invariant("hypergraph " + std::to_string(i) + " repeats vertex '" + v + "'");
    }
    for (const auto& e : g.edges) {
      std::set<std::string> seen;
      for (const auto& v : e) {
        if (!vs.count(v)) invariant("hypergraph " + std::to_string(i) + " edge uses '" + v + "' outside its vertices");
        if (!seen.insert(v).second) invariant("hypergraph " + std::to_string(i) + " edge repeats '" + v + "'");
      }
    }
  }
}

HypergraphFamilyInstance parse_hypergraph_family(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Kind::Syntax, e.what(), e.byte);
  }
  auto strings = [](const json& j, const std::string& where) {
    if (!j.is_array()) schema(where + " must be a list of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
      if (!e.is_string()) schema(where + " must be a list of strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  };
  if (!doc.is_object()) schema("hypergraph document must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "ground" && it.key() != "hypergraphs" && it.key() != "k") schema("unknown field '" + it.key() + "'");
  }
  if (!doc.contains("ground") || !doc.contains("hypergraphs") || !doc.contains("k")) {
    schema("hypergraph document needs ground, hypergraphs and k");
  }
  HypergraphFamilyInstance h;
  h.ground = strings(doc["ground"], "ground");
  if (!doc["k"].is_number_integer()) schema("k must be an integer");
  h.k = doc["k"].get<std::int64_t>();
  if (!doc["hypergraphs"].is_array()) schema("hypergraphs must be a list");
  for (const auto& g : doc["hypergraphs"]) {
    if (!g.is_object()) schema("hypergraph must be an object");
    for (auto it = g.begin(); it != g.end(); ++it) {
      if (it.key() != "vertices" && it.key() != "edges") schema("unknown hypergraph field '" + it.key() + "'");
    }
    if (!g.contains("vertices") || !g.contains("edges")) schema("hypergraph needs vertices and edges");
    Hypergraph hg;
    hg.vertices = strings(g["vertices"], "vertices");
    if (!g["edges"].is_array()) schema("edges must be a list");
    for (const auto& e : g["edges"]) hg.edges.push_back(strings(e, "edge"));
    h.hypergraphs.push_back(std::move(hg));
  }
  validate(h);
  return h;
}

CspInstance reduce(const HypergraphFamilyInstance& h) {
  validate(h);
  auto pos = ground_index(h);
  InstanceSpec spec;
  spec.domain = {"0", "1"};
  spec.free_value = "0";
  spec.variables = h.ground;
  spec.k = h.k;
  for (std::size_t i = 0; i < h.hypergraphs.size(); ++i) {
    const auto& g = h.hypergraphs[i];
    const std::string name = "H" + std::to_string(i);
    if (g.vertices.empty()) {
      bool allows_empty = std::any_of(g.edges.begin(), g.edges.end(), [](const auto& e) { return e.empty(); });
      if (allows_empty) continue;
      if (h.ground.empty()) invariant("hypergraph " + std::to_string(i) + " cannot be hit and the ground set is empty");
      spec.relations[name] = RelationSpec{1, {}};
      spec.constraints.push_back({name, {h.ground.front()}});
      continue;
    }
    std::vector<std::string> vs = ordered_vertices(g, pos);
    RelationSpec rel;
    rel.arity = vs.size();
    for (const auto& e : g.edges) {
      std::vector<std::string> row;
      for (const auto& v : vs) row.push_back(std::find(e.begin(), e.end(), v) != e.end() ? "1" : "0");
      rel.tuples.push_back(std::move(row));
    }
    spec.relations[name] = std::move(rel);
    spec.constraints.push_back({name, vs});
  }
  return CspInstance::from_spec(spec);
}

std::optional<HittingSet> solve_hitting(const HypergraphFamilyInstance& h, const SolveOptions& options) {
  CspInstance inst = reduce(h);
  SolveResult r = solve(inst, options);
  if (!r.witness) return std::nullopt;
  HittingSet out;
  for (const Pair& p : r.witness->pairs()) out.push_back(inst.variables()[p.var]);
  return out;
}

std::optional<HittingSet> oracle_hitting(const HypergraphFamilyInstance& h) {
  validate(h);
  const std::size_t n = h.ground.size();
  const std::size_t k = static_cast<std::size_t>(h.k);
  if (k > n) return std::nullopt;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  do {
    std::set<std::string> chosen;
    for (std::size_t i : idx) chosen.insert(h.ground[i]);
    bool ok = true;
    for (const auto& g : h.hypergraphs) {
      std::set<std::string> inter;
      for (const auto& v : g.vertices) {
        if (chosen.count(v)) inter.insert(v);
      }
      ok = std::any_of(g.edges.begin(), g.edges.end(),
                       [&](const auto& e) { return std::set<std::string>(e.begin(), e.end()) == inter; });
      if (!ok) break;
    }
    if (ok) {
      HittingSet out;
      for (std::size_t i : idx) out.push_back(h.ground[i]);
      return out;
    }
  } while (next_combination(idx, n));
  return std::nullopt;
}

}  // namespace w1
