#pragma once

#include <random>

#include "schwarz1d/core.hpp"

namespace schwarz1d::test {

inline SolutionField filled(const GridPair& grid, double value) {
  SolutionField u;
  u.u1 = NodeArray(grid.I, value);
  u.u2 = NodeArray(grid.J, value);
  return u;
}

inline SolutionField random_field(const GridPair& grid, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  SolutionField u = filled(grid, 0.0);
  for (int i = 1; i <= grid.I; ++i) u.u1(i) = d(rng);
  for (int j = 1; j <= grid.J; ++j) u.u2(j) = d(rng);
  return u;
}

inline CoupledProblem linear_problem(double a1, double b1, double c1, double a2,
                                     double b2, double c2) {
  CoupledProblem p;
  p.a1 = a1;
  p.b1 = b1;
  p.c1 = c1;
  p.a2 = a2;
  p.b2 = b2;
  p.c2 = c2;
  return p;
}

}  // namespace schwarz1d::test
