#pragma once

// Seeded random instances for property tests, benchmarks and `w1 gen`.
// Draws go through a local bounded sampler on top of mt19937_64, so a seed
// produces the same instance with every standard library.

#include <cstdint>
#include <random>

#include "w1/hitting_set.hpp"
#include "w1/instance.hpp"
#include "w1/subset_sum.hpp"

namespace w1 {

/// Uniform integer in [lo, hi] (inclusive) by rejection sampling.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);
/// True with probability numerator / denominator.
bool coin(std::mt19937_64& rng, std::uint64_t numerator, std::uint64_t denominator);

struct GeneratorConfig {
  unsigned variables = 6;
  /// Including the free value.
  unsigned domain = 3;
  unsigned constraints = 4;
  unsigned max_arity = 3;
  /// Probability that a tuple of D^arity is listed.
  double density = 0.3;
  unsigned k = 2;
  std::uint64_t seed = 1;
  /// Force in the tuples of one random size-k support, so the instance is
  /// satisfiable.
  bool plant = false;
  /// Emit per-variable weights (and, with `target`, a weight target).
  bool weights = false;
  bool target = false;
  std::uint64_t max_weight = 20;
};

InstanceSpec random_instance_spec(const GeneratorConfig& config, std::mt19937_64& rng);
InstanceSpec random_instance_spec(const GeneratorConfig& config);
CspInstance random_instance(const GeneratorConfig& config);

/// Every generated instance with this many variables has the same shape:
/// a path of binary "at least one endpoint" constraints over a Boolean
/// domain, k = 2.
CspInstance path_cover_instance(unsigned variables);

struct HypergraphConfig {
  unsigned ground = 6;
  unsigned hypergraphs = 3;
  unsigned max_vertices = 4;
  unsigned max_edges = 4;
  unsigned k = 2;
};

HypergraphFamilyInstance random_hypergraph_family(const HypergraphConfig& config, std::mt19937_64& rng);

/// n values in [0, max_value]; target is the sum of a random k-subset when
/// `plant`, otherwise uniform in [0, k * max_value].
SubsetSumInstance random_subset_sum(std::size_t n, unsigned k, std::uint64_t max_value, bool plant,
                                    std::mt19937_64& rng);

}  // namespace w1
