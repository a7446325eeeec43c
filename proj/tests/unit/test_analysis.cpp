#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "schwarz1d/analysis.hpp"
#include "schwarz1d/cli/cases.hpp"
#include "schwarz1d/driver.hpp"
#include "schwarz1d/errors.hpp"
#include "schwarz1d/validation/oracles.hpp"
#include "test_support.hpp"

namespace schwarz1d {
namespace {

TEST(TridiagEigenvalues, MatchDenseOracle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int draw = 0; draw < 50; ++draw) {
    const int n = 1 + draw % 30;
    const double lo = d(rng);
    const double hi = std::copysign(std::abs(d(rng)), lo);
    const double mid = d(rng);
    auto fast = tridiag_eigenvalues(lo, mid, hi, n);
    std::vector<double> dense;
    for (auto v : validation::dense_eigenvalues(
             validation::toeplitz_tridiagonal(lo, mid, hi, n))) {
      EXPECT_NEAR(v.imag(), 0.0, 1e-10);
      dense.push_back(v.real());
    }
    std::sort(fast.begin(), fast.end());
    std::sort(dense.begin(), dense.end());
    for (int i = 0; i < n; ++i) EXPECT_NEAR(fast[i], dense[i], 1e-10);
  }
}

TEST(TridiagEigenvalues, ComplexSpectrumRejected) {
  EXPECT_THROW(tridiag_eigenvalues(1.0, 0.0, -1.0, 4), ComplexSpectrum);
}

TEST(Scarborough, JacobiClosedForm) {
  const SchemeCoefficients c = uniform_coefficients(5, 5, 0.1, 0.5, 0.2, 0.1, 0.5, 0.2);
  EXPECT_NEAR(scarborough_lhs_explicit(c), 1.0 / 2.2, 1e-15);
}

TEST(Scarborough, AcMiddleTermVanishesAtMatchedKappa) {
  const double eps = 0.5, eta = 0.1, gamma = 0.2;
  const double kappa = 2 * eps + gamma;
  const SchemeCoefficients c =
      uniform_coefficients(5, 5, eta, eps, gamma, eta, eps, gamma, kappa);
  EXPECT_NEAR(scarborough_lhs_ac(c), 2 * eps / (1 + 2 * eps + gamma), 1e-15);
}

TEST(Scarborough, AcTendsToOneForLargeKappa) {
  const SchemeCoefficients c =
      uniform_coefficients(5, 5, 0.1, 0.5, 0.2, 0.1, 0.5, 0.2, 1e9);
  const double k = scarborough_lhs_ac(c);
  EXPECT_LT(k, 1.0);
  EXPECT_GT(k, 1.0 - 1e-8);
}

TEST(Scarborough, BoundsSameLevelSpectralRadius) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> eta(-1, 1), eps(0, 2), g(0, 1);
  int accepted = 0;
  while (accepted < 100) {
    const SchemeCoefficients c = uniform_coefficients(
        6, 9, eta(rng), eps(rng), g(rng), eta(rng), eps(rng), g(rng));
    const double k = scarborough_lhs_explicit(c);
    if (k >= 1.0) continue;
    ++accepted;
    const double rho = spectral_radius(assemble_iteration_matrix(
        c, InterfaceCondition::classic_same_level(), ExplicitScheme::Jacobi));
    EXPECT_LE(rho, k * (1 + 1e-12));
  }
}

// Advances random interface-consistent data with direct sweeps and compares
// with powers of the assembled matrix.
void check_powers(const InterfaceCondition& cond, SchemeKind scheme, double kappa) {
  const GridPair g = make_grid_pair(4, 4, 1.0);
  CoupledProblem p = test::linear_problem(0.3, 0.4, 0.1, -0.2, 0.6, 0.0);
  const SchemeCoefficients c = compute_coefficients(p, g, kappa);
  const ExplicitScheme es = scheme == SchemeKind::Jacobi
                                ? ExplicitScheme::Jacobi
                                : ExplicitScheme::ArtificialCompressibility;
  const IterationMatrix m = assemble_iteration_matrix(c, cond, es);
  std::mt19937_64 rng(17);
  const SolutionField zero = test::filled(g, 0.0);
  SchwarzState state = make_state(zero, g);
  state.iterate = test::random_field(g, rng);
  state.iterate.u1(1) = 0.0;
  state.iterate.u2(g.J) = 0.0;
  if (m.index_of(1, g.I) < 0) {
    // Same-level states carry no interface unknowns; make them consistent.
    state.iterate.u1(g.I) = state.iterate.u2(2);
    state.iterate.u2(1) = state.iterate.u1(g.I - 1);
  }
  state.donors = DonorSnapshot::take(state.iterate);
  std::vector<double> x(m.n);
  for (int r = 0; r < m.n; ++r) {
    x[r] = state.iterate.sub(m.labels[r].subdomain)(m.labels[r].node);
  }
  SolverSettings s;
  s.scheme = scheme;
  s.interface = cond;
  s.kappa = kappa;
  const validation::DenseMatrix dense = validation::to_dense(m);
  for (int step = 0; step < 6; ++step) {
    state = schwarz_step(state, p, g, s);
    x = validation::multiply(dense, x);
    for (int r = 0; r < m.n; ++r) {
      EXPECT_NEAR(state.iterate.sub(m.labels[r].subdomain)(m.labels[r].node), x[r],
                  1e-13)
          << "step " << step << " row " << r;
    }
  }
}

TEST(IterationMatrix, PowersMatchSweepsSameLevelJacobi) {
  check_powers(InterfaceCondition::classic_same_level(), SchemeKind::Jacobi, 0.0);
}

TEST(IterationMatrix, PowersMatchSweepsLaggedJacobi) {
  check_powers(InterfaceCondition::classic_lagged(), SchemeKind::Jacobi, 0.0);
}

TEST(IterationMatrix, PowersMatchSweepsRelaxationAc) {
  check_powers(InterfaceCondition::relaxation(0.3, 0.7),
               SchemeKind::ArtificialCompressibility, 1.5);
}

TEST(IterationMatrix, SameLevelHasInteriorUnknownsOnly) {
  const SchemeCoefficients c = uniform_coefficients(10, 20, 0.1, 0.5, 0, 0.1, 0.5, 0);
  EXPECT_EQ(assemble_iteration_matrix(c, InterfaceCondition::classic_same_level(),
                                      ExplicitScheme::Jacobi).n,
            26);
  EXPECT_EQ(assemble_iteration_matrix(c, InterfaceCondition::classic_lagged(),
                                      ExplicitScheme::Jacobi).n,
            28);
}

TEST(SpectralRadius, MatchesDenseOracle) {
  const GridPair g = make_grid_pair(10, 20, 0.5);
  for (const char* id : {"1", "2", "3"}) {
    const SchemeCoefficients c =
        compute_coefficients(cli::require_case(id).problem, g, 0.0);
    const IterationMatrix m = assemble_iteration_matrix(
        c, InterfaceCondition::relaxation(0.5, 0.5), ExplicitScheme::Jacobi);
    EXPECT_NEAR(spectral_radius(m),
                validation::dense_spectral_radius(validation::to_dense(m)), 1e-10);
  }
}

TEST(SpectralRadius, Case1SameLevel) {
  const SchemeCoefficients c = compute_coefficients(
      cli::require_case("1").problem, make_grid_pair(40, 80, 0.5), 0.0);
  EXPECT_NEAR(spectral_radius(assemble_iteration_matrix(
                  c, InterfaceCondition::classic_same_level(), ExplicitScheme::Jacobi)),
              0.966594, 1e-4);
}

TEST(Recursion, SatisfiesDefinition) {
  const SchemeCoefficients c = uniform_coefficients(8, 9, 0.2, 0.3, 0.1, -0.1, 0.4, 0.05);
  const RecursionTable t = recursion_tables(c);
  const double s1 = c.sub1.diagonal(), s2 = c.sub2.diagonal();
  EXPECT_DOUBLE_EQ(t.R1(2), s1);
  EXPECT_DOUBLE_EQ(t.R2(8), s2);
  for (int i = 3; i <= 7; ++i) {
    EXPECT_NEAR(t.R1(i),
                s1 + (0.2 - 0.3) * (0.2 + 0.3) / t.R1(i - 1), 1e-15);
  }
  for (int j = 2; j <= 7; ++j) {
    EXPECT_NEAR(t.R2(j), s2 + (-0.1 - 0.4) * (-0.1 + 0.4) / t.R2(j + 1), 1e-15);
  }
  EXPECT_EQ(t.r1_endpoint(), t.R1(7));
}

TEST(Contraction, Case1Value) {
  const SchemeCoefficients c = compute_coefficients(
      cli::require_case("1").problem, make_grid_pair(40, 80, 1.0), 0.0);
  EXPECT_NEAR(contraction_classic(recursion_tables(c), c), 0.691235, 5e-6);
}

TEST(Contraction, MatchesMeasuredRatio) {
  const CoupledProblem p = test::linear_problem(0.4, 0.05, 0.3, -0.6, 0.02, 0.0);
  for (auto [I, J] : {std::pair{3, 3}, std::pair{5, 7}, std::pair{10, 20}}) {
    const GridPair g = make_grid_pair(I, J, 0.8);
    const SchemeCoefficients c = compute_coefficients(p, g, 0.0);
    const double theory = contraction_classic(recursion_tables(c), c);
    SolverSettings s;
    s.interface = InterfaceCondition::classic_lagged();
    const StepResult r = solve_time_step(initial_condition(p, g), p, g, s);
    ASSERT_FALSE(r.trace.ratios.empty());
    EXPECT_NEAR(r.trace.ratios.front(), theory, 1e-8 * std::abs(theory))
        << I << "x" << J;
  }
}

TEST(Optimal, ParametersZeroTheContraction) {
  for (const char* id : {"1", "2", "3i"}) {
    const SchemeCoefficients c = compute_coefficients(
        cli::require_case(id).problem, make_grid_pair(40, 80, 1.0), 0.0);
    const RecursionTable t = recursion_tables(c);
    const OptimalParams o = optimal_params(t, c);
    EXPECT_TRUE(is_numerically_zero(contraction_optimal(t, c, o.alpha, o.beta))) << id;
  }
}

TEST(Optimal, Case1Parameters) {
  const SchemeCoefficients c = compute_coefficients(
      cli::require_case("1").problem, make_grid_pair(40, 80, 1.0), 0.0);
  const OptimalParams o = optimal_params(recursion_tables(c), c);
  EXPECT_NEAR(o.alpha, 0.202577, 1e-4 * 0.202577);
  EXPECT_NEAR(o.beta, -0.202988, 1e-4 * 0.202988);
}

TEST(Optimal, FiniteDifferenceSaddle) {
  const SchemeCoefficients c = compute_coefficients(
      cli::require_case("3i").problem, make_grid_pair(40, 80, 1.0), 0.0);
  const RecursionTable t = recursion_tables(c);
  const OptimalParams o = optimal_params(t, c);
  const auto d = validation::saddle_differences(
      [&](double a, double b) { return contraction_optimal(t, c, a, b); },
      o.alpha, o.beta, 1e-4);
  EXPECT_LE(std::abs(d.d_alpha), 1e-6);
  EXPECT_LE(std::abs(d.d_beta), 1e-6);
  EXPECT_LE(std::abs(d.d_alpha_alpha), 1e-6);
  EXPECT_LE(std::abs(d.d_beta_beta), 1e-6);
  EXPECT_GT(std::abs(d.d_alpha_beta), 1e-6);
}

TEST(Optimal, MeasuredContractionMatchesFormulaOffOptimum) {
  const CoupledProblem& p = cli::require_case("1").problem;
  const GridPair g = make_grid_pair(10, 20, 1.0);
  const SchemeCoefficients c = compute_coefficients(p, g, 0.0);
  const RecursionTable t = recursion_tables(c);
  const OptimalParams o = optimal_params(t, c);
  const double a = o.alpha + 0.3, b = o.beta - 0.2;
  SolverSettings s;
  s.interface = InterfaceCondition::optimal(a, b);
  const StepResult r = solve_time_step(initial_condition(p, g), p, g, s);
  ASSERT_FALSE(r.trace.ratios.empty());
  const double theory = contraction_optimal(t, c, a, b);
  EXPECT_NEAR(r.trace.ratios.front(), theory, 1e-8 * std::abs(theory));
}

TEST(Optimal, DegenerateRecursionRejected) {
  // R1(2) = 2 and eta - eps = -0.5, so alpha = -0.75 zeroes the denominator.
  const SchemeCoefficients c = uniform_coefficients(3, 3, 0.0, 0.5, 0, 0.0, 0.5, 0);
  const RecursionTable t = recursion_tables(c);
  EXPECT_THROW(contraction_optimal(t, c, -0.75, 0.5), DegenerateCoefficients);
}

}  // namespace
}  // namespace schwarz1d
