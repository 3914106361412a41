#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

namespace w1tools {

struct BenchArgs {
  std::vector<unsigned> sizes{10, 50, 100, 500};
  unsigned repeats = 3;
  std::size_t sample = 2000;
};

/// Per size: table build time, mean per-candidate check time and the
/// lookup counts of every sampled candidate. Returns 1 if the lookup
/// counts change with the size.
int run_bench(const BenchArgs& args, std::ostream& out);

}  // namespace w1tools
