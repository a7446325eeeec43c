#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schwarz1d::validation {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<CheckResult> checks;  // every sub-check, failing or not
};

// Randomized properties; the same seed gives the same draws.
std::vector<CheckResult> scarborough_bound_property(std::uint64_t seed);
std::vector<CheckResult> contraction_matches_measurement(std::uint64_t seed);
std::vector<CheckResult> optimum_is_saddle();
std::vector<CheckResult> thomas_matches_dense(std::uint64_t seed);
std::vector<CheckResult> tridiag_eigenvalues_match_dense(std::uint64_t seed);
std::vector<CheckResult> burgers_reduces_to_linear(std::uint64_t seed);

CriterionResult table3_criterion();
CriterionResult table5_criterion();
CriterionResult table2_criterion();
CriterionResult table7_criterion();
CriterionResult burgers_tables_criterion();
CriterionResult strategy_criterion();
CriterionResult property_criterion(std::uint64_t seed);
CriterionResult figure_criterion();

std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

// "PASS [n] name" followed by the failing sub-checks, or all of them when
// verbose is set.
std::string format_criterion(const CriterionResult& result, bool verbose);

}  // namespace schwarz1d::validation
