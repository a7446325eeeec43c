#include "schwarz1d/driver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>

#include "schwarz1d/schemes.hpp"

namespace schwarz1d {

Strategy Strategy::one_to_one() { return {}; }

Strategy Strategy::fixed_inner(int count) {
  Strategy s;
  s.kind = StrategyKind::FixedInner;
  s.inner_count = count;
  return s;
}

Strategy Strategy::to_convergence() {
  Strategy s;
  s.kind = StrategyKind::InnerToConvergence;
  return s;
}

void Strategy::validate() const {
  if (inner_count < 1) throw InvalidInput("inner count must be >= 1");
  if (!(outer_tolerance > 0.0) || !(inner_tolerance > 0.0)) {
    throw InvalidInput("tolerances must be positive");
  }
  if (max_outer < 1 || max_inner < 1) {
    throw InvalidInput("iteration caps must be >= 1");
  }
}

void SolverSettings::validate() const {
  strategy.validate();
  const bool explicit_scheme = scheme != SchemeKind::Implicit;
  if (explicit_scheme && interface.kind == InterfaceKind::Optimal) {
    throw InvalidInput(
        "the optimal interface condition requires the implicit scheme");
  }
  if (!explicit_scheme && interface.kind == InterfaceKind::Relaxation) {
    throw InvalidInput(
        "the relaxation interface condition requires an explicit scheme");
  }
  if (scheme == SchemeKind::ArtificialCompressibility && !(kappa > 0.0)) {
    throw InvalidInput("the pseudo-time scheme requires kappa > 0");
  }
  if (interface.kind != InterfaceKind::Optimal || !auto_optimal) {
    interface.validate();
  }
}

SchwarzState make_state(const SolutionField& u_n, const GridPair& grid) {
  if (u_n.u1.size() != grid.I || u_n.u2.size() != grid.J) {
    throw InvalidInput("solution field does not match the grid");
  }
  SchwarzState state;
  state.u_n = u_n;
  state.iterate = u_n;
  state.iterate.time = u_n.time + grid.dt;
  state.donors = DonorSnapshot::take(state.iterate);
  return state;
}

namespace {

// Runs the two subdomain tasks, concurrently when requested.
void run_pair(bool concurrent, const std::function<void()>& first,
              const std::function<void()>& second) {
  if (concurrent) {
    auto pending = std::async(std::launch::async, first);
    second();
    pending.get();
  } else {
    first();
    second();
  }
}

int inner_limit(const Strategy& s) {
  switch (s.kind) {
    case StrategyKind::OneToOne: return 1;
    case StrategyKind::FixedInner: return s.inner_count;
    case StrategyKind::InnerToConvergence: return s.max_inner;
  }
  return 1;
}

const SolutionField* eta_source(const CoupledProblem& problem,
                                const SolverSettings& settings,
                                const SchwarzState& state) {
  if (problem.flux != FluxKind::Burgers) return nullptr;
  return settings.burgers_mode == BurgersMode::TimeLevel ? &state.u_n
                                                         : &state.iterate;
}

// Inner sweeps on subdomain k with the interface entries held fixed.
int inner_sweeps(const CoupledProblem& problem, const GridPair& grid,
                 const SolverSettings& settings, const SchwarzState& state,
                 int k, NodeArray& out) {
  SchemeCoefficients coeffs = compute_coefficients(
      problem, grid, settings.kappa, eta_source(problem, settings, state));
  const bool refresh = problem.flux == FluxKind::Burgers &&
                       settings.burgers_mode == BurgersMode::LaggedIterate;
  SolutionField work = state.iterate;
  const int limit = inner_limit(settings.strategy);
  const bool early_stop = settings.strategy.kind != StrategyKind::OneToOne;
  int count = 0;
  while (count < limit) {
    NodeArray next = settings.scheme == SchemeKind::Jacobi
                         ? jacobi_sweep(coeffs, work, state.u_n, k)
                         : ac_sweep(coeffs, work, state.u_n, k);
    double change = 0.0;
    for (int i = 1; i <= next.size(); ++i) {
      change = std::max(change, std::abs(next(i) - work.sub(k)(i)));
    }
    work.sub(k) = std::move(next);
    ++count;
    if (refresh) assign_eta_field(coeffs.sub(k), work.sub(k), grid);
    if (early_stop && change <= settings.strategy.inner_tolerance) break;
  }
  out = std::move(work.sub(k));
  return count;
}

}  // namespace

SchwarzState schwarz_step(const SchwarzState& state,
                          const CoupledProblem& problem, const GridPair& grid,
                          const SolverSettings& settings) {
  SchwarzState next;
  next.u_n = state.u_n;
  next.iterate.time = state.iterate.time;

  if (settings.scheme == SchemeKind::Implicit) {
    const SchemeCoefficients coeffs = compute_coefficients(
        problem, grid, 0.0, eta_source(problem, settings, state));
    const InterfaceRows rows = implicit_rows(settings.interface, state.donors);
    run_pair(
        settings.concurrent,
        [&] {
          next.iterate.u1 =
              implicit_subdomain_step(coeffs, rows.sub1, state.u_n, 1);
        },
        [&] {
          next.iterate.u2 =
              implicit_subdomain_step(coeffs, rows.sub2, state.u_n, 2);
        });
    next.inner1 = 1;
    next.inner2 = 1;
  } else {
    run_pair(
        settings.concurrent,
        [&] {
          next.inner1 =
              inner_sweeps(problem, grid, settings, state, 1, next.iterate.u1);
        },
        [&] {
          next.inner2 =
              inner_sweeps(problem, grid, settings, state, 2, next.iterate.u2);
        });
    const InterfaceValues values =
        exchange_explicit(settings.interface, next.iterate.u1,
                          next.iterate.u2, state.iterate.u1, state.iterate.u2);
    next.iterate.u1(grid.I) = values.u1_last;
    next.iterate.u2(1) = values.u2_first;
  }
  next.donors = DonorSnapshot::take(next.iterate);
  return next;
}

namespace {

std::vector<double> flatten_error(const SolutionField& u,
                                  const SolutionField& ref) {
  std::vector<double> out;
  out.reserve(u.u1.size() + u.u2.size());
  for (int k = 1; k <= 2; ++k) {
    for (int i = 1; i <= u.sub(k).size(); ++i) {
      out.push_back(u.sub(k)(i) - ref.sub(k)(i));
    }
  }
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

double max_abs(const std::vector<double>& a) {
  double out = 0.0;
  for (double v : a) out = std::max(out, std::abs(v));
  return out;
}

double max_abs(const SolutionField& u) {
  double out = 0.0;
  for (int k = 1; k <= 2; ++k) {
    for (double v : u.sub(k).values()) out = std::max(out, std::abs(v));
  }
  return out;
}

}  // namespace

double measured_contraction(const std::vector<double>& ratios,
                            const std::vector<double>& error_max,
                            double floor, int* samples) {
  // ratios[s] pairs error_max[s] (iteration s+1) with error_max[s+2].
  int used = 0;
  double log_sum = 0.0;
  int negative = 0;
  if (!ratios.empty() && !error_max.empty()) {
    const double window = 1e-5 * error_max[0];
    for (std::size_t s = 0; s < ratios.size(); ++s) {
      if (s + 2 >= error_max.size()) break;
      if (error_max[s] <= floor) break;
      if (error_max[s + 2] < window || error_max[s + 2] <= floor) break;
      if (ratios[s] == 0.0) continue;
      log_sum += std::log(std::abs(ratios[s]));
      if (ratios[s] < 0.0) ++negative;
      ++used;
    }
  }
  if (samples != nullptr) *samples = used;
  if (used == 0) {
    // Convergence faster than the sampling window: report the first ratio.
    if (!ratios.empty() && !error_max.empty() && error_max[0] > floor) {
      if (samples != nullptr) *samples = 1;
      return ratios[0];
    }
    return 0.0;
  }
  const double magnitude = std::exp(log_sum / used);
  return 2 * negative > used ? -magnitude : magnitude;
}

StepResult solve_time_step(const SolutionField& u_n,
                           const CoupledProblem& problem, const GridPair& grid,
                           const SolverSettings& input_settings) {
  problem.validate();
  input_settings.validate();
  SolverSettings settings = input_settings;
  IterationTrace trace;
  if (settings.interface.kind == InterfaceKind::Optimal &&
      settings.auto_optimal) {
    const OptimalParams params =
        predicted_optimal(u_n, problem, grid, settings.convention);
    settings.interface.alpha = params.alpha;
    settings.interface.beta = params.beta;
    settings.interface.validate();
  }
  if (settings.interface.kind == InterfaceKind::Optimal) {
    trace.alpha = settings.interface.alpha;
    trace.beta = settings.interface.beta;
  }

  std::optional<SolutionField> reference;
  double floor = 0.0;
  if (settings.track_errors) {
    reference = monolithic_solve(u_n, problem, grid, settings.burgers_mode);
    floor = 100.0 * std::numeric_limits<double>::epsilon() *
            std::max(1.0, max_abs(*reference));
  }

  SchwarzState state = make_state(u_n, grid);
  std::vector<double> e_older;  // e^{m-2}
  std::vector<double> e_old;    // e^{m-1}
  const Strategy& strategy = settings.strategy;
  for (int m = 1; m <= strategy.max_outer; ++m) {
    SchwarzState next = schwarz_step(state, problem, grid, settings);
    const double change = max_difference(next.iterate, state.iterate);
    const double mismatch = overlap_mismatch(next.iterate);
    trace.change.push_back(change);
    trace.mismatch.push_back(mismatch);
    trace.inner1.push_back(next.inner1);
    trace.inner2.push_back(next.inner2);
    trace.total_load += next.inner1 + next.inner2;
    trace.outer_count = m;
    if (reference) {
      std::vector<double> e = flatten_error(next.iterate, *reference);
      trace.error_max.push_back(max_abs(e));
      trace.error_l2.push_back(std::sqrt(dot(e, e)));
      if (!e_older.empty()) {
        const double denom = dot(e_older, e_older);
        trace.ratios.push_back(denom > 0.0 ? dot(e, e_older) / denom : 0.0);
      }
      e_older = std::move(e_old);
      e_old = std::move(e);
    }
    state = std::move(next);
    if (change + mismatch <= strategy.outer_tolerance) {
      trace.converged = true;
      break;
    }
  }
  if (reference) {
    trace.rho_num = measured_contraction(trace.ratios, trace.error_max, floor,
                                         &trace.rho_samples);
  }
  return {state.iterate, trace};
}

SolutionField monolithic_solve(const SolutionField& u_n,
                               const CoupledProblem& problem,
                               const GridPair& grid, BurgersMode mode) {
  problem.validate();
  const int I = grid.I;
  const int J = grid.J;
  const int G = grid.distinct_nodes();
  // Global node g (0-based) owned by subdomain 1 for g <= I-2, else by 2.
  auto to_global = [&](const SolutionField& u) {
    std::vector<double> v(G);
    for (int g = 0; g < G; ++g) {
      v[g] = g <= I - 2 ? u.u1(g + 1) : u.u2(g - I + 3);
    }
    return v;
  };
  const SchemeCoefficients base = compute_coefficients(
      problem, grid, 0.0,
      problem.flux == FluxKind::Burgers ? &u_n : nullptr);
  const std::vector<double> level = to_global(u_n);
  const double scale = grid.dt / (2.0 * grid.dx);

  auto solve_with = [&](const std::vector<double>* eta_state) {
    TridiagonalSystem sys(G);
    sys.diag[0] = 1.0;
    sys.rhs[0] = u_n.u1(1);
    sys.diag[G - 1] = 1.0;
    sys.rhs[G - 1] = u_n.u2(J);
    for (int g = 1; g <= G - 2; ++g) {
      const bool first = g <= I - 2;
      const SubdomainCoefficients& sc = first ? base.sub1 : base.sub2;
      double eta;
      if (eta_state != nullptr) {
        eta = scale * (*eta_state)[g];
      } else {
        eta = first ? sc.eta_field(g + 1) : sc.eta_field(g - I + 3);
      }
      sys.lower[g] = -(eta + sc.eps);
      sys.diag[g] = sc.diagonal();
      sys.upper[g] = eta - sc.eps;
      sys.rhs[g] = level[g];
    }
    return thomas_solve(sys);
  };

  std::vector<double> v;
  if (problem.flux == FluxKind::Burgers && mode == BurgersMode::LaggedIterate) {
    v = level;
    bool settled = false;
    for (int it = 0; it < 1000 && !settled; ++it) {
      std::vector<double> next = solve_with(&v);
      double change = 0.0;
      double size = 1.0;
      for (int g = 0; g < G; ++g) {
        change = std::max(change, std::abs(next[g] - v[g]));
        size = std::max(size, std::abs(next[g]));
      }
      v = std::move(next);
      // Round-off limit cycles sit near 1e-15; stop well above them.
      settled = change <= 1e-13 * size;
    }
    if (!settled) {
      throw NumericalError("lagged Burgers reference did not converge");
    }
  } else {
    v = solve_with(nullptr);
  }

  SolutionField out;
  out.time = u_n.time + grid.dt;
  out.u1 = NodeArray(I);
  out.u2 = NodeArray(J);
  for (int i = 1; i <= I; ++i) out.u1(i) = v[i - 1];
  for (int j = 1; j <= J; ++j) out.u2(j) = v[I - 3 + j];
  return out;
}

int steps_for(double t_end, const GridPair& grid) {
  if (!(t_end >= 0.0)) throw InvalidInput("t_end must be nonnegative");
  const double ratio = t_end / grid.dt;
  const double steps = std::round(ratio);
  if (std::abs(steps * grid.dt - t_end) > 1e-12) {
    throw InvalidInput("t_end is not an integer multiple of dt");
  }
  return static_cast<int>(steps);
}

MarchResult march(const CoupledProblem& problem, const GridPair& grid,
                  const SolverSettings& settings, int steps) {
  if (steps < 0) throw InvalidInput("step count must be nonnegative");
  MarchResult out;
  out.series.push_back(initial_condition(problem, grid));
  for (int n = 0; n < steps; ++n) {
    StepResult step = solve_time_step(out.series.back(), problem, grid,
                                      settings);
    out.traces.push_back(std::move(step.trace));
    if (!out.traces.back().converged) {
      out.failure = "step " + std::to_string(n + 1) +
                    " did not converge within max_outer";
      return out;
    }
    out.series.push_back(std::move(step.solution));
  }
  out.completed = true;
  return out;
}

std::vector<SolutionField> reference_march(const CoupledProblem& problem,
                                           const GridPair& grid, int steps,
                                           BurgersMode mode) {
  std::vector<SolutionField> out;
  out.reserve(steps + 1);
  out.push_back(initial_condition(problem, grid));
  for (int n = 0; n < steps; ++n) {
    out.push_back(monolithic_solve(out.back(), problem, grid, mode));
  }
  return out;
}

OptimalParams predicted_optimal(const SolutionField& u_n,
                                const CoupledProblem& problem,
                                const GridPair& grid,
                                EndpointConvention convention) {
  const SchemeCoefficients coeffs = compute_coefficients(
      problem, grid, 0.0, problem.flux == FluxKind::Burgers ? &u_n : nullptr);
  return optimal_params(recursion_tables(coeffs, convention), coeffs);
}

ConventionCalibration calibrate_endpoint_convention(
    const std::vector<CoupledProblem>& problems, const GridPair& grid) {
  ConventionCalibration out;
  SolverSettings settings;
  settings.scheme = SchemeKind::Implicit;
  settings.interface = InterfaceCondition::classic_lagged();
  for (const CoupledProblem& problem : problems) {
    const SchemeCoefficients coeffs =
        compute_coefficients(problem, grid, 0.0);
    const double last = contraction_classic(
        recursion_tables(coeffs, EndpointConvention::LastInterior), coeffs);
    const double second = contraction_classic(
        recursion_tables(coeffs, EndpointConvention::SecondToLastInterior),
        coeffs);
    const StepResult step = solve_time_step(initial_condition(problem, grid),
                                            problem, grid, settings);
    out.error_last += std::abs(last - step.trace.rho_num);
    out.error_second += std::abs(second - step.trace.rho_num);
  }
  out.selected = out.error_second < out.error_last
                     ? EndpointConvention::SecondToLastInterior
                     : EndpointConvention::LastInterior;
  return out;
}

}  // namespace schwarz1d
