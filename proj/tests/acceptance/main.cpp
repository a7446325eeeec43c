#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "schwarz1d/validation/acceptance.hpp"

// Prints one PASS/FAIL line per criterion; exits nonzero if any fails.
// Usage: schwarz1d_acceptance [seed] [--verbose]
int main(int argc, char** argv) {
  std::uint64_t seed = 20240611;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--verbose") {
      verbose = true;
    } else {
      seed = std::strtoull(arg.c_str(), nullptr, 10);
    }
  }
  bool all = true;
  for (const auto& r : schwarz1d::validation::run_acceptance(seed)) {
    std::cout << schwarz1d::validation::format_criterion(r, verbose);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
