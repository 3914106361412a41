#include "w1/generator.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "w1/combinatorics.hpp"
#include "w1/error.hpp"

namespace w1 {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw UsageError("draw: empty range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = span + 1;
  // Largest multiple of range that fits; values at or above it are redrawn.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + x % range;
}

bool coin(std::mt19937_64& rng, std::uint64_t numerator, std::uint64_t denominator) {
  return draw(rng, 0, denominator - 1) < numerator;
}

namespace {

std::vector<std::size_t> sample_without_replacement(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[draw(rng, i, n - 1)]);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

InstanceSpec random_instance_spec(const GeneratorConfig& config, std::mt19937_64& rng) {
  if (config.variables == 0) throw UsageError("generator: need at least one variable");
  if (config.domain < 2) throw UsageError("generator: need a domain with a nonzero value");
  if (config.max_arity == 0) throw UsageError("generator: arity cap must be positive");
  if (config.k > config.variables) throw UsageError("generator: k exceeds the variable count");
  if (config.density < 0 || config.density > 1) throw UsageError("generator: density must be in [0, 1]");

  InstanceSpec spec;
  for (unsigned d = 0; d < config.domain; ++d) spec.domain.push_back(std::to_string(d));
  spec.free_value = "0";
  for (unsigned v = 0; v < config.variables; ++v) spec.variables.push_back("x" + std::to_string(v));
  spec.k = config.k;

  // Planted support: variable -> value (0 = free).
  std::vector<unsigned> planted(config.variables, 0);
  if (config.plant) {
    for (std::size_t v : sample_without_replacement(rng, config.variables, config.k)) {
      planted[v] = static_cast<unsigned>(draw(rng, 1, config.domain - 1));
    }
  }

  const std::uint64_t density_scale = 1'000'000;
  const auto density_num = static_cast<std::uint64_t>(config.density * density_scale + 0.5);

  for (unsigned c = 0; c < config.constraints; ++c) {
    const unsigned arity = static_cast<unsigned>(draw(rng, 1, config.max_arity));
    ConstraintSpec cs;
    cs.relation = "R" + std::to_string(c);
    std::vector<unsigned> vars;
    for (unsigned i = 0; i < arity; ++i) {
      // Mostly distinct arguments, with an occasional repetition.
      unsigned v = static_cast<unsigned>(draw(rng, 0, config.variables - 1));
      if (!vars.empty() && coin(rng, 1, 8)) v = vars[draw(rng, 0, vars.size() - 1)];
      vars.push_back(v);
      cs.vars.push_back(spec.variables[v]);
    }

    RelationSpec rel;
    rel.arity = arity;
    std::vector<unsigned> tuple(arity, 0);
    std::set<std::vector<unsigned>> listed;
    while (true) {
      if (coin(rng, density_num, density_scale)) listed.insert(tuple);
      std::size_t pos = 0;
      while (pos < arity && ++tuple[pos] == config.domain) tuple[pos++] = 0;
      if (pos == arity) break;
    }
    if (config.plant) {
      std::vector<unsigned> t;
      for (unsigned v : vars) t.push_back(planted[v]);
      listed.insert(t);
    }
    for (const auto& t : listed) {
      std::vector<std::string> labels;
      for (unsigned x : t) labels.push_back(spec.domain[x]);
      rel.tuples.push_back(std::move(labels));
    }
    spec.relations.emplace(cs.relation, std::move(rel));
    spec.constraints.push_back(std::move(cs));
  }

  if (config.weights) {
    std::map<std::string, std::string> w;
    std::uint64_t planted_sum = 0;
    for (unsigned v = 0; v < config.variables; ++v) {
      const std::uint64_t x = draw(rng, 0, config.max_weight);
      w.emplace(spec.variables[v], std::to_string(x));
      if (planted[v] != 0) planted_sum += x;
    }
    spec.weights = std::move(w);
    if (config.target) {
      const std::uint64_t t = config.plant ? planted_sum : draw(rng, 0, config.k * config.max_weight);
      spec.target = std::to_string(t);
    }
  }
  return spec;
}

InstanceSpec random_instance_spec(const GeneratorConfig& config) {
  std::mt19937_64 rng(config.seed);
  return random_instance_spec(config, rng);
}

CspInstance random_instance(const GeneratorConfig& config) { return CspInstance::from_spec(random_instance_spec(config)); }

CspInstance path_cover_instance(unsigned variables) {
  if (variables < 2) throw UsageError("path instance needs at least two variables");
  InstanceSpec spec;
  spec.domain = {"0", "1"};
  spec.free_value = "0";
  for (unsigned v = 0; v < variables; ++v) spec.variables.push_back("v" + std::to_string(v));
  spec.relations.emplace("E", RelationSpec{2, {{"1", "0"}, {"0", "1"}, {"1", "1"}}});
  for (unsigned v = 0; v + 1 < variables; ++v) {
    spec.constraints.push_back({"E", {spec.variables[v], spec.variables[v + 1]}});
  }
  spec.k = 2;
  return CspInstance::from_spec(spec);
}

HypergraphFamilyInstance random_hypergraph_family(const HypergraphConfig& config, std::mt19937_64& rng) {
  if (config.k > config.ground) throw UsageError("generator: k exceeds the ground set");
  HypergraphFamilyInstance h;
  for (unsigned v = 0; v < config.ground; ++v) h.ground.push_back("w" + std::to_string(v));
  h.k = config.k;
  for (unsigned i = 0; i < config.hypergraphs; ++i) {
    Hypergraph g;
    const auto size = draw(rng, 0, std::min(config.max_vertices, config.ground));
    for (std::size_t v : sample_without_replacement(rng, config.ground, size)) g.vertices.push_back(h.ground[v]);
    std::set<std::vector<std::string>> edges;
    const auto edge_count = draw(rng, 0, config.max_edges);
    for (std::uint64_t e = 0; e < edge_count; ++e) {
      std::vector<std::string> edge;
      for (const auto& v : g.vertices) {
        if (coin(rng, 1, 2)) edge.push_back(v);
      }
      edges.insert(std::move(edge));
    }
    g.edges.assign(edges.begin(), edges.end());
    h.hypergraphs.push_back(std::move(g));
  }
  return h;
}

SubsetSumInstance random_subset_sum(std::size_t n, unsigned k, std::uint64_t max_value, bool plant,
                                    std::mt19937_64& rng) {
  if (n == 0 || k > n) throw UsageError("generator: need 0 <= k <= n and n >= 1");
  SubsetSumInstance inst;
  inst.k = k;
  for (std::size_t i = 0; i < n; ++i) inst.values.emplace_back(draw(rng, 0, max_value));
  if (plant) {
    BigInt t = 0;
    for (std::size_t i : sample_without_replacement(rng, n, k)) t += inst.values[i];
    inst.target = t;
  } else {
    inst.target = BigInt(draw(rng, 0, saturating_mul(k, max_value)));
  }
  return inst;
}

}  // namespace w1
