#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schwarz1d/analysis.hpp"
#include "schwarz1d/core.hpp"
#include "schwarz1d/interface.hpp"

namespace schwarz1d {

enum class SchemeKind { Jacobi, ArtificialCompressibility, Implicit };

// Where the Burgers eta field comes from inside one time step.
enum class BurgersMode {
  LaggedIterate,  // previous outer (or inner) iterate
  TimeLevel,      // u^n, the linearization used by the closed-form analysis
};

enum class StrategyKind { OneToOne, FixedInner, InnerToConvergence };

// Inner/outer arrangement for the explicit schemes. FixedInner(L) performs up
// to L sweeps per outer iteration and stops early once the sweep change drops
// below inner_tolerance. The implicit scheme does one solve per outer
// iteration regardless of the strategy.
struct Strategy {
  StrategyKind kind = StrategyKind::OneToOne;
  int inner_count = 1;
  double outer_tolerance = 1e-12;
  double inner_tolerance = 1e-12;
  int max_outer = 200000;
  int max_inner = 200000;

  static Strategy one_to_one();
  static Strategy fixed_inner(int count);
  static Strategy to_convergence();

  void validate() const;
  bool operator==(const Strategy&) const = default;
};

struct SolverSettings {
  SchemeKind scheme = SchemeKind::Implicit;
  InterfaceCondition interface;
  // Recompute optimal (alpha, beta) from u^n at every step.
  bool auto_optimal = false;
  Strategy strategy;
  double kappa = 0.0;
  BurgersMode burgers_mode = BurgersMode::LaggedIterate;
  EndpointConvention convention = EndpointConvention::LastInterior;
  bool concurrent = false;
  bool track_errors = true;

  void validate() const;
};

struct IterationTrace {
  std::vector<double> error_max;  // per outer iteration, against u^inf
  std::vector<double> error_l2;
  std::vector<double> change;     // max-norm change across the iteration
  std::vector<double> mismatch;   // overlap incoherence after the iteration
  std::vector<int> inner1;
  std::vector<int> inner2;
  std::vector<double> ratios;     // <e^{m+2}, e^m> / <e^m, e^m>, m = 1, 2, ...
  double rho_num = 0.0;
  int rho_samples = 0;            // ratios entering rho_num
  bool converged = false;
  int outer_count = 0;
  long total_load = 0;
  double alpha = 0.0;             // optimal parameters used, if any
  double beta = 0.0;
};

struct SchwarzState {
  SolutionField u_n;
  SolutionField iterate;
  DonorSnapshot donors;
  int inner1 = 0;  // inner iterations of the last outer iteration
  int inner2 = 0;
};

SchwarzState make_state(const SolutionField& u_n, const GridPair& grid);

// One outer iteration m -> m+1.
SchwarzState schwarz_step(const SchwarzState& state,
                          const CoupledProblem& problem, const GridPair& grid,
                          const SolverSettings& settings);

struct StepResult {
  SolutionField solution;
  IterationTrace trace;
};

StepResult solve_time_step(const SolutionField& u_n,
                           const CoupledProblem& problem, const GridPair& grid,
                           const SolverSettings& settings);

// Converged solution of one time step from a single global tridiagonal
// system. Burgers with LaggedIterate is iterated to a fixed point.
SolutionField monolithic_solve(const SolutionField& u_n,
                               const CoupledProblem& problem,
                               const GridPair& grid, BurgersMode mode);

// Geometric mean of the two-iteration ratios, keeping samples whose errors
// are well above the rounding floor.
double measured_contraction(const std::vector<double>& ratios,
                            const std::vector<double>& error_max,
                            double floor, int* samples = nullptr);

struct MarchResult {
  std::vector<SolutionField> series;  // u^0 .. u^steps reached
  std::vector<IterationTrace> traces;
  bool completed = false;
  std::string failure;
};

MarchResult march(const CoupledProblem& problem, const GridPair& grid,
                  const SolverSettings& settings, int steps);

// t_end must be an integer multiple of dt within 1e-12.
int steps_for(double t_end, const GridPair& grid);

// u^0 .. u^steps from monolithic solves.
std::vector<SolutionField> reference_march(const CoupledProblem& problem,
                                           const GridPair& grid, int steps,
                                           BurgersMode mode);

// Optimal parameters predicted from the state u_n.
OptimalParams predicted_optimal(const SolutionField& u_n,
                                const CoupledProblem& problem,
                                const GridPair& grid,
                                EndpointConvention convention);

struct ConventionCalibration {
  EndpointConvention selected = EndpointConvention::LastInterior;
  double error_last = 0.0;    // sum |predicted - measured| with R1(I-1)
  double error_second = 0.0;  // same with R1(I-2)
};

// Picks the endpoint convention whose classic contraction matches the
// measured implicit-solver ratio best over the given linear problems.
ConventionCalibration calibrate_endpoint_convention(
    const std::vector<CoupledProblem>& problems, const GridPair& grid);

}  // namespace schwarz1d
