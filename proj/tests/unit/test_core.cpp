#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "schwarz1d/cli/cases.hpp"
#include "schwarz1d/core.hpp"
#include "schwarz1d/errors.hpp"
#include "test_support.hpp"

namespace schwarz1d {
namespace {

TEST(Grid, SpacingAndOverlap) {
  const GridPair g = make_grid_pair(40, 80, 1.0);
  EXPECT_NEAR(g.dx, 2.0 / 117.0, 1e-15);
  EXPECT_NEAR(g.dt, g.dx, 1e-15);
  EXPECT_DOUBLE_EQ(g.x1(1), -1.0);
  EXPECT_NEAR(g.x2(g.J), 1.0, 1e-13);
  EXPECT_NEAR(g.x1(g.I - 1), g.x2(1), 1e-14);
  EXPECT_NEAR(g.x1(g.I), g.x2(2), 1e-14);
  EXPECT_EQ(g.interior_count(), 116);
  EXPECT_EQ(g.distinct_nodes(), 118);
}

TEST(Grid, SmallMesh) {
  const GridPair g = make_grid_pair(10, 20, 0.1);
  EXPECT_NEAR(g.dx, 2.0 / 27.0, 1e-15);
  EXPECT_NEAR(g.dt, 0.1 * g.dx, 1e-16);
}

TEST(Grid, RejectsBadInput) {
  EXPECT_THROW(make_grid_pair(2, 10, 1.0), InvalidInput);
  EXPECT_THROW(make_grid_pair(10, 10, 0.0), InvalidInput);
  EXPECT_THROW(make_grid_pair(10, 10, -1.0), InvalidInput);
}

TEST(Coefficients, LinearDefinitions) {
  const CoupledProblem p = test::linear_problem(0.5, 0.002, 0.1, 0.25, 0.001, 0.2);
  const GridPair g = make_grid_pair(40, 80, 0.5);
  const SchemeCoefficients c = compute_coefficients(p, g, 2.0);
  EXPECT_NEAR(c.sub1.eta, 0.5 * g.dt / (2 * g.dx), 1e-15);
  EXPECT_NEAR(c.sub1.eps, 0.002 * g.dt / (g.dx * g.dx), 1e-15);
  EXPECT_NEAR(c.sub1.gamma, 0.1 * g.dt, 1e-15);
  EXPECT_NEAR(c.sub2.eta, 0.25 * g.dt / (2 * g.dx), 1e-15);
  EXPECT_EQ(c.kappa, 2.0);
  for (int i = 1; i <= g.I; ++i) EXPECT_EQ(c.sub1.eta_field(i), c.sub1.eta);
  EXPECT_DOUBLE_EQ(c.sub1.diagonal(), 1 + 2 * c.sub1.eps + c.sub1.gamma);
}

TEST(Coefficients, BurgersFieldFollowsState) {
  const CoupledProblem& p = cli::require_case("4").problem;
  const GridPair g = make_grid_pair(10, 20, 1.0);
  const SolutionField u = initial_condition(p, g);
  const SchemeCoefficients c = compute_coefficients(p, g, 0.0, &u);
  for (int i = 1; i <= g.I; ++i) {
    EXPECT_NEAR(c.sub1.eta_field(i), g.dt * u.u1(i) / (2 * g.dx), 1e-15);
  }
  for (int j = 1; j <= g.J; ++j) {
    EXPECT_NEAR(c.sub2.eta_field(j), g.dt * u.u2(j) / (2 * g.dx), 1e-15);
  }
}

TEST(Coefficients, BurgersNeedsState) {
  const CoupledProblem& p = cli::require_case("4").problem;
  EXPECT_THROW(compute_coefficients(p, make_grid_pair(10, 20, 1.0), 0.0),
               InvalidInput);
}

TEST(InitialCondition, OverlapIsCoherent) {
  for (const char* id : {"1", "5"}) {
    const CoupledProblem& p = cli::require_case(id).problem;
    const GridPair g = make_grid_pair(10, 20, 1.0);
    const SolutionField u = initial_condition(p, g);
    EXPECT_EQ(overlap_mismatch(u), 0.0) << id;
    EXPECT_EQ(u.u1(1), p.left_bc);
    EXPECT_EQ(u.u2(g.J), p.right_bc);
  }
}

TEST(InitialCondition, SineShape) {
  const CoupledProblem& p = cli::require_case("1").problem;
  const GridPair g = make_grid_pair(10, 20, 1.0);
  const SolutionField u = initial_condition(p, g);
  for (int i = 2; i < g.I; ++i) {
    EXPECT_NEAR(u.u1(i), -std::sin(std::numbers::pi * g.x1(i)), 1e-14);
  }
}

TEST(Problem, ValidateRejectsNegativeDiffusion) {
  CoupledProblem p = test::linear_problem(0, -1, 0, 0, 1, 0);
  EXPECT_THROW(p.validate(), InvalidInput);
}

}  // namespace
}  // namespace schwarz1d
