#pragma once

// The property suite behind `w1 selftest` and the acceptance binary. Each
// property draws its inputs from a fixed seed and compares the production
// path against an independent reference.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace w1 {

struct SelftestConfig {
  std::uint64_t seed = 0x5eed'2024;
  /// Sample counts are scaled by percent / 100 (at least one sample each).
  unsigned percent = 100;
};

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Property {
  std::string name;
  std::string summary;
  std::function<PropertyResult(const SelftestConfig&)> run;
};

const std::vector<Property>& properties();

/// Runs every property (or only those whose name is in `only`, when
/// non-empty), reporting each result as it completes.
std::vector<PropertyResult> run_selftest(const SelftestConfig& config, const std::vector<std::string>& only = {},
                                         const std::function<void(const PropertyResult&)>& on_result = {});

/// One `PASS|FAIL name (seconds) detail` line.
std::string render(const PropertyResult& r);

}  // namespace w1
