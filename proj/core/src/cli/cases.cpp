#include "schwarz1d/cli/cases.hpp"

namespace schwarz1d::cli {

namespace {

CoupledProblem linear(double a1, double b1, double c1, double a2, double b2,
                      double c2) {
  CoupledProblem p{a1, b1, c1, a2, b2, c2};
  p.flux = FluxKind::Linear;
  p.initial = InitialKind::Sine;
  return p;
}

CoupledProblem burgers(double b1, double c1, double b2, double c2,
                       InitialKind initial) {
  CoupledProblem p{0.0, b1, c1, 0.0, b2, c2};
  p.flux = FluxKind::Burgers;
  p.initial = initial;
  return p;
}

}  // namespace

const std::vector<CaseDefinition>& case_registry() {
  static const std::vector<CaseDefinition> cases = {
      {"1", linear(0.01, 0.5, 0.0, 0.01, 0.5, 0.0),
       "linear, diffusion dominated in both subdomains"},
      {"2", linear(0.5, 0.002, 0.0, 0.25, 0.001, 0.0),
       "linear, advection dominated in both subdomains"},
      {"3", linear(0.25, 0.01, 0.25, -0.25, 0.01, 0.5),
       "linear, mixed coupling"},
      {"3i", linear(0.25, 0.01, 0.5, -0.25, 0.02, 0.25),
       "linear, mixed coupling as used by the implicit-scheme studies"},
      {"4", burgers(0.5, 0.0, 0.5, 0.0, InitialKind::Sine),
       "Burgers, diffusion dominated"},
      {"5", burgers(0.02, 2.0, 0.02, 3.0, InitialKind::Step),
       "Burgers, advection dominated, step initial data"},
      {"5i", burgers(0.05, 2.0, 0.05, 3.0, InitialKind::Sine),
       "Burgers, advection dominated as used by the implicit-scheme studies"},
      {"6", burgers(0.1, 0.2, 0.2, 0.1, InitialKind::Step),
       "Burgers, mixed, step initial data"},
      {"7", burgers(0.5, 0.0, 0.51, 0.0, InitialKind::Sine),
       "Burgers, slightly different diffusion"},
  };
  return cases;
}

const CaseDefinition* find_case(std::string_view id) {
  for (const CaseDefinition& c : case_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const CaseDefinition& require_case(std::string_view id) {
  const CaseDefinition* c = find_case(id);
  if (c == nullptr) {
    throw InvalidInput("unknown case id '" + std::string(id) + "'");
  }
  return *c;
}

}  // namespace schwarz1d::cli
