#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schwarz1d/core.hpp"

namespace schwarz1d::cli {

struct CaseDefinition {
  std::string id;
  CoupledProblem problem;
  std::string description;
};

// Cases 1-3 are linear, 4-7 Burgers. 3i and 5i are the coefficient sets that
// the implicit-scheme studies are consistent with (see README).
const std::vector<CaseDefinition>& case_registry();

// nullptr when the id is unknown.
const CaseDefinition* find_case(std::string_view id);

const CaseDefinition& require_case(std::string_view id);

}  // namespace schwarz1d::cli
