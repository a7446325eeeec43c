#include <gtest/gtest.h>

#include <random>

#include "schwarz1d/errors.hpp"
#include "schwarz1d/schemes.hpp"
#include "schwarz1d/validation/oracles.hpp"
#include "test_support.hpp"

namespace schwarz1d {
namespace {

TridiagonalSystem random_dominant(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  TridiagonalSystem s(n);
  for (int i = 0; i < n; ++i) {
    if (i > 0) s.lower[i] = d(rng);
    if (i + 1 < n) s.upper[i] = d(rng);
    s.diag[i] = std::abs(s.lower[i]) + std::abs(s.upper[i]) + 0.5 + std::abs(d(rng));
    s.rhs[i] = d(rng);
  }
  return s;
}

TEST(Thomas, MatchesDenseEliminationOnRandomSystems) {
  std::mt19937_64 rng(7);
  for (int draw = 0; draw < 100; ++draw) {
    const TridiagonalSystem s = random_dominant(1 + draw % 50, rng);
    ASSERT_TRUE(diagonally_dominant(s));
    const auto x = thomas_solve(s);
    const auto y = validation::dense_solve(validation::to_dense(s), s.rhs);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(x[i], y[i], 1e-10);
  }
}

TEST(Thomas, ResidualIsSmall) {
  std::mt19937_64 rng(11);
  const TridiagonalSystem s = random_dominant(200, rng);
  const auto x = thomas_solve(s);
  const auto ax = validation::multiply(validation::to_dense(s), x);
  for (int i = 0; i < s.size(); ++i) EXPECT_NEAR(ax[i], s.rhs[i], 1e-12);
}

TEST(Thomas, ZeroPivotThrows) {
  TridiagonalSystem s(3);
  s.diag = {0.0, 1.0, 1.0};
  s.upper = {1.0, 0.0, 0.0};
  s.rhs = {1.0, 1.0, 1.0};
  EXPECT_THROW(thomas_solve(s), SingularSystem);
}

TEST(Thomas, RejectsMismatchedSizes) {
  TridiagonalSystem s(3);
  s.rhs.pop_back();
  EXPECT_THROW(thomas_solve(s), InvalidInput);
}

TEST(JacobiSweep, InteriorFormula) {
  const GridPair g = make_grid_pair(5, 6, 1.0);
  const SchemeCoefficients c = uniform_coefficients(5, 6, 0.1, 0.4, 0.2, -0.2, 0.3, 0.1);
  std::mt19937_64 rng(3);
  const SolutionField prev = test::random_field(g, rng);
  const SolutionField un = test::random_field(g, rng);
  const NodeArray next = jacobi_sweep(c, prev, un, 1);
  const auto& s = c.sub1;
  for (int i = 2; i < g.I; ++i) {
    const double expected = ((s.eta + s.eps) * prev.u1(i - 1) +
                             (s.eps - s.eta) * prev.u1(i + 1) + un.u1(i)) /
                            s.diagonal();
    EXPECT_NEAR(next(i), expected, 1e-15);
  }
  EXPECT_EQ(next(1), prev.u1(1));
  EXPECT_EQ(next(g.I), prev.u1(g.I));
}

TEST(AcSweep, ConvergedStateIsFixedPoint) {
  // A state solving the implicit relation is left unchanged by the sweep.
  const GridPair g = make_grid_pair(6, 8, 1.0);
  const SchemeCoefficients c =
      uniform_coefficients(6, 8, 0.1, 0.4, 0.2, -0.2, 0.3, 0.1, 0.7);
  std::mt19937_64 rng(5);
  const SolutionField un = test::random_field(g, rng);
  SolutionField u = un;
  for (int k = 1; k <= 2; ++k) {
    const NodeArray& src = un.sub(k);
    const int n = src.size();
    InterfaceRow row = dirichlet_row(src(k == 1 ? n : 1));
    u.sub(k) = implicit_subdomain_step(c, row, un, k);
    const NodeArray next = ac_sweep(c, u, un, k);
    for (int i = 1; i <= n; ++i) EXPECT_NEAR(next(i), u.sub(k)(i), 1e-13);
  }
}

TEST(AcSweep, RequiresPositiveKappa) {
  const GridPair g = make_grid_pair(5, 5, 1.0);
  const SchemeCoefficients c = uniform_coefficients(5, 5, 0, 0.5, 0, 0, 0.5, 0);
  const SolutionField u = test::filled(g, 0.0);
  EXPECT_THROW(ac_sweep(c, u, u, 1), InvalidInput);
}

TEST(ImplicitStep, MatchesDenseSolveOfAssembledSystem) {
  const GridPair g = make_grid_pair(7, 9, 1.0);
  const SchemeCoefficients c = uniform_coefficients(7, 9, 0.3, 0.2, 0.1, 0.1, 0.5, 0.0);
  std::mt19937_64 rng(9);
  const SolutionField un = test::random_field(g, rng);
  const InterfaceRow row{-1.0, 1.4, 0.3};
  for (int k = 1; k <= 2; ++k) {
    const TridiagonalSystem s = assemble_subdomain_system(c, row, un, k);
    const auto dense = validation::dense_solve(validation::to_dense(s), s.rhs);
    const NodeArray u = implicit_subdomain_step(c, row, un, k);
    for (int i = 1; i <= u.size(); ++i) EXPECT_NEAR(u(i), dense[i - 1], 1e-13);
    EXPECT_EQ(u(k == 1 ? 1 : u.size()), un.sub(k)(k == 1 ? 1 : u.size()));
  }
  const NodeArray u1 = implicit_subdomain_step(c, row, un, 1);
  EXPECT_NEAR(row.neighbor * u1(g.I - 1) + row.self * u1(g.I), row.rhs, 1e-13);
  const NodeArray u2 = implicit_subdomain_step(c, row, un, 2);
  EXPECT_NEAR(row.self * u2(1) + row.neighbor * u2(2), row.rhs, 1e-13);
}

}  // namespace
}  // namespace schwarz1d
