#include <benchmark/benchmark.h>

#include <random>

#include "schwarz1d/analysis.hpp"
#include "schwarz1d/cli/cases.hpp"
#include "schwarz1d/driver.hpp"
#include "schwarz1d/schemes.hpp"

namespace {

using namespace schwarz1d;

void BM_ThomasSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  TridiagonalSystem sys(n);
  for (int i = 0; i < n; ++i) {
    sys.lower[i] = d(rng);
    sys.upper[i] = d(rng);
    sys.diag[i] = 3.0;
    sys.rhs[i] = d(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(thomas_solve(sys));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ThomasSolve)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_SpectralRadius(benchmark::State& state) {
  const int I = static_cast<int>(state.range(0));
  const SchemeCoefficients c = compute_coefficients(
      cli::require_case("1").problem, make_grid_pair(I, 2 * I, 0.5), 0.0);
  const IterationMatrix m = assemble_iteration_matrix(
      c, InterfaceCondition::classic_same_level(), ExplicitScheme::Jacobi);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(m));
}
BENCHMARK(BM_SpectralRadius)->Arg(10)->Arg(20)->Arg(40)->Arg(80);

void BM_ImplicitTimeStep(benchmark::State& state) {
  const CoupledProblem& p = cli::require_case("1").problem;
  const GridPair g = make_grid_pair(40, 80, 1.0);
  const SolutionField u0 = initial_condition(p, g);
  SolverSettings s;
  s.interface = InterfaceCondition::classic_lagged();
  s.track_errors = false;
  for (auto _ : state) benchmark::DoNotOptimize(solve_time_step(u0, p, g, s));
}
BENCHMARK(BM_ImplicitTimeStep);

void BM_JacobiTimeStep(benchmark::State& state) {
  const CoupledProblem& p = cli::require_case("3").problem;
  const GridPair g = make_grid_pair(40, 80, 0.5);
  const SolutionField u0 = initial_condition(p, g);
  SolverSettings s;
  s.scheme = SchemeKind::Jacobi;
  s.interface = InterfaceCondition::classic_same_level();
  s.track_errors = false;
  for (auto _ : state) benchmark::DoNotOptimize(solve_time_step(u0, p, g, s));
}
BENCHMARK(BM_JacobiTimeStep);

}  // namespace

BENCHMARK_MAIN();
