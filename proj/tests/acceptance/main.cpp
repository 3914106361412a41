// Runs the full property suite at its nominal sample counts and prints one
// PASS/FAIL line per property. Exit status is nonzero iff any fails.

#include <iostream>
#include <string>
#include <vector>

#include "w1/selftest.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> only(argv + 1, argv + argc);
  w1::SelftestConfig config;
  std::size_t failed = 0;
  std::size_t total = 0;
  try {
    w1::run_selftest(config, only, [&](const w1::PropertyResult& r) {
      ++total;
      failed += r.pass ? 0 : 1;
      std::cout << w1::render(r) << std::endl;
    });
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << '\n';
    return 2;
  }
  std::cout << (total - failed) << "/" << total << " properties passed\n";
  return failed == 0 ? 0 : 1;
}
