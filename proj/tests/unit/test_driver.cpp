#include <gtest/gtest.h>

#include <cmath>

#include "schwarz1d/cli/cases.hpp"
#include "schwarz1d/driver.hpp"
#include "schwarz1d/errors.hpp"
#include "test_support.hpp"

namespace schwarz1d {
namespace {

SolverSettings jacobi(const Strategy& strategy) {
  SolverSettings s;
  s.scheme = SchemeKind::Jacobi;
  s.interface = InterfaceCondition::classic_same_level();
  s.strategy = strategy;
  return s;
}

TEST(SolveTimeStep, ZeroDataConvergesImmediately) {
  const CoupledProblem p = test::linear_problem(0.5, 0.01, 0.1, 0.2, 0.02, 0.0);
  const GridPair g = make_grid_pair(10, 20, 1.0);
  const SolutionField zero = test::filled(g, 0.0);
  for (const SolverSettings& s :
       {SolverSettings{}, jacobi(Strategy::one_to_one()),
        jacobi(Strategy::to_convergence())}) {
    const StepResult r = solve_time_step(zero, p, g, s);
    EXPECT_TRUE(r.trace.converged);
    EXPECT_EQ(r.trace.outer_count, 1);
    EXPECT_EQ(max_difference(r.solution, zero), 0.0);
  }
}

TEST(SolveTimeStep, ConvergesToMonolithicSolution) {
  const CoupledProblem& p = cli::require_case("3").problem;
  const GridPair g = make_grid_pair(10, 20, 0.5);
  const SolutionField u0 = initial_condition(p, g);
  const SolutionField ref = monolithic_solve(u0, p, g, BurgersMode::LaggedIterate);
  for (const SolverSettings& s :
       {SolverSettings{}, jacobi(Strategy::one_to_one()),
        jacobi(Strategy::fixed_inner(5))}) {
    const StepResult r = solve_time_step(u0, p, g, s);
    ASSERT_TRUE(r.trace.converged);
    EXPECT_LT(max_difference(r.solution, ref), 1e-10);
    EXPECT_LT(overlap_mismatch(r.solution), 1e-11);
  }
}

TEST(SchwarzStep, MonolithicSolutionIsFixedPoint) {
  const CoupledProblem& p = cli::require_case("2").problem;
  const GridPair g = make_grid_pair(10, 20, 1.0);
  const SolutionField u0 = initial_condition(p, g);
  const SolutionField ref = monolithic_solve(u0, p, g, BurgersMode::LaggedIterate);
  for (const SolverSettings& s :
       {SolverSettings{}, jacobi(Strategy::one_to_one())}) {
    SchwarzState state = make_state(u0, g);
    state.iterate = ref;
    state.donors = DonorSnapshot::take(ref);
    const SchwarzState next = schwarz_step(state, p, g, s);
    EXPECT_LT(max_difference(next.iterate, ref), 1e-14);
  }
}

TEST(SolveTimeStep, ConcurrentMatchesSequentialExactly) {
  const CoupledProblem& p = cli::require_case("1").problem;
  const GridPair g = make_grid_pair(10, 20, 1.0);
  const SolutionField u0 = initial_condition(p, g);
  for (SolverSettings s : {SolverSettings{}, jacobi(Strategy::fixed_inner(3))}) {
    const StepResult a = solve_time_step(u0, p, g, s);
    s.concurrent = true;
    const StepResult b = solve_time_step(u0, p, g, s);
    EXPECT_EQ(max_difference(a.solution, b.solution), 0.0);
    EXPECT_EQ(a.trace.outer_count, b.trace.outer_count);
    EXPECT_EQ(a.trace.error_max, b.trace.error_max);
  }
}

TEST(SolveTimeStep, LoadIsSumOfInnerIterations) {
  const CoupledProblem& p = cli::require_case("3").problem;
  const GridPair g = make_grid_pair(10, 20, 0.5);
  const StepResult r = solve_time_step(initial_condition(p, g), p, g,
                                       jacobi(Strategy::fixed_inner(4)));
  long sum = 0;
  for (std::size_t m = 0; m < r.trace.inner1.size(); ++m) {
    sum += r.trace.inner1[m] + r.trace.inner2[m];
    EXPECT_LE(r.trace.inner1[m], 4);
  }
  EXPECT_EQ(sum, r.trace.total_load);
}

TEST(SolveTimeStep, StrategyLoadsIncreaseForCase3) {
  const CoupledProblem& p = cli::require_case("3").problem;
  const GridPair g = make_grid_pair(40, 80, 0.5);
  const SolutionField u0 = initial_condition(p, g);
  long previous = 0;
  for (const Strategy& st : {Strategy::one_to_one(), Strategy::fixed_inner(5),
                             Strategy::fixed_inner(15), Strategy::to_convergence()}) {
    const StepResult r = solve_time_step(u0, p, g, jacobi(st));
    ASSERT_TRUE(r.trace.converged);
    EXPECT_GT(r.trace.total_load, previous);
    previous = r.trace.total_load;
  }
}

TEST(SolveTimeStep, ErrorsDecreaseOnceSmall) {
  const CoupledProblem& p = cli::require_case("1").problem;
  const GridPair g = make_grid_pair(10, 20, 1.0);
  const StepResult r =
      solve_time_step(initial_condition(p, g), p, g, jacobi(Strategy::one_to_one()));
  const auto& e = r.trace.error_max;
  ASSERT_FALSE(e.empty());
  for (std::size_t m = 1; m < e.size(); ++m) {
    if (e[m - 1] < 1e-3 * e[0]) EXPECT_LE(e[m], e[m - 1] * (1 + 1e-9));
  }
}

TEST(SolveTimeStep, OptimalConvergesInFewIterations) {
  const CoupledProblem& p = cli::require_case("2").problem;
  const GridPair g = make_grid_pair(40, 80, 1.0);
  SolverSettings s;
  s.interface = InterfaceCondition::optimal(0, 0);
  s.auto_optimal = true;
  const StepResult r = solve_time_step(initial_condition(p, g), p, g, s);
  ASSERT_TRUE(r.trace.converged);
  EXPECT_LE(r.trace.outer_count, 4);
  EXPECT_LE(std::abs(r.trace.rho_num), 1e-10);
}

TEST(SolverSettings, RejectsUnsupportedCombinations) {
  SolverSettings s;
  s.interface = InterfaceCondition::relaxation(0.5, 0.5);
  EXPECT_THROW(s.validate(), InvalidInput);
  SolverSettings t = jacobi(Strategy::one_to_one());
  t.interface = InterfaceCondition::optimal(0.2, -0.2);
  EXPECT_THROW(t.validate(), InvalidInput);
  SolverSettings u = jacobi(Strategy::one_to_one());
  u.scheme = SchemeKind::ArtificialCompressibility;
  EXPECT_THROW(u.validate(), InvalidInput);  // kappa missing
}

TEST(MeasuredContraction, GeometricMeanOfRatios) {
  const std::vector<double> errors = {1.0, 0.5, 0.25, 0.125, 0.0625};
  const std::vector<double> ratios = {0.2, 0.3, 0.25};
  int samples = 0;
  const double rho = measured_contraction(ratios, errors, 1e-14, &samples);
  EXPECT_EQ(samples, 3);
  EXPECT_NEAR(rho, std::cbrt(0.2 * 0.3 * 0.25), 1e-15);
}

TEST(MeasuredContraction, FallsBackToFirstRatio) {
  const std::vector<double> errors = {1.0, 1e-17, 1e-18};
  const std::vector<double> ratios = {1e-16};
  EXPECT_EQ(measured_contraction(ratios, errors, 1e-14), 1e-16);
}

TEST(March, FirstOrderInTime) {
  const CoupledProblem& p = cli::require_case("3").problem;
  const double dx = 2.0 / 57.0;
  const double t_end = 16 * 0.4 * dx;
  auto final_state = [&](double ratio) {
    const GridPair g = make_grid_pair(20, 40, ratio);
    const MarchResult r = march(p, g, SolverSettings{}, steps_for(t_end, g));
    EXPECT_TRUE(r.completed);
    return r.series.back();
  };
  const SolutionField fine = final_state(0.0125);
  const double e1 = max_difference(final_state(0.4), fine);
  const double e2 = max_difference(final_state(0.2), fine);
  const double e3 = max_difference(final_state(0.1), fine);
  // Halving dt halves the error; the finest run stands in for the exact one.
  EXPECT_NEAR(e1 / e2, 2.0, 0.3);
  EXPECT_NEAR(e2 / e3, 2.0, 0.3);
}

TEST(StepsFor, RequiresWholeSteps) {
  const GridPair g = make_grid_pair(10, 20, 1.0);
  EXPECT_EQ(steps_for(3 * g.dt, g), 3);
  EXPECT_THROW(steps_for(2.5 * g.dt, g), InvalidInput);
}

TEST(Burgers, LaggedIterateMatchesPicardReference) {
  const CoupledProblem& p = cli::require_case("4").problem;
  const GridPair g = make_grid_pair(10, 20, 0.5);
  const SolutionField u0 = initial_condition(p, g);
  SolverSettings s;
  s.interface = InterfaceCondition::classic_lagged();
  const StepResult r = solve_time_step(u0, p, g, s);
  ASSERT_TRUE(r.trace.converged);
  EXPECT_LT(max_difference(r.solution,
                           monolithic_solve(u0, p, g, BurgersMode::LaggedIterate)),
            1e-10);
}

TEST(Burgers, TimeLevelModeIsLinearSolve) {
  const CoupledProblem& p = cli::require_case("6").problem;
  const GridPair g = make_grid_pair(10, 20, 0.5);
  const SolutionField u0 = initial_condition(p, g);
  SolverSettings s;
  s.burgers_mode = BurgersMode::TimeLevel;
  const StepResult r = solve_time_step(u0, p, g, s);
  ASSERT_TRUE(r.trace.converged);
  EXPECT_LT(max_difference(r.solution,
                           monolithic_solve(u0, p, g, BurgersMode::TimeLevel)),
            1e-10);
}

TEST(Calibration, PicksLastInteriorForLinearCases) {
  std::vector<CoupledProblem> problems;
  for (const char* id : {"1", "2", "3"}) problems.push_back(cli::require_case(id).problem);
  const ConventionCalibration c =
      calibrate_endpoint_convention(problems, make_grid_pair(10, 20, 1.0));
  EXPECT_EQ(c.selected, EndpointConvention::LastInterior);
  EXPECT_LT(c.error_last, c.error_second);
}

}  // namespace
}  // namespace schwarz1d
