#include "schwarz1d/validation/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "schwarz1d/analysis.hpp"
#include "schwarz1d/cli/cases.hpp"
#include "schwarz1d/cli/experiments.hpp"
#include "schwarz1d/driver.hpp"
#include "schwarz1d/schemes.hpp"
#include "schwarz1d/validation/oracles.hpp"

namespace schwarz1d::validation {

namespace {

using cli::TableResult;
using cli::TableRow;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

CheckResult check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

CriterionResult finish(int id, std::string name,
                       std::vector<CheckResult> checks) {
  CriterionResult r{id, std::move(name), !checks.empty(), std::move(checks)};
  for (const CheckResult& c : r.checks) r.passed = r.passed && c.passed;
  return r;
}

// Compares a table row against its reference within an explicit tolerance.
CheckResult row_within(const TableResult& table, const std::string& row,
                       const std::string& quantity, double tolerance,
                       bool relative) {
  const std::string name =
      "table" + std::to_string(table.table) + " " + row + " " + quantity;
  try {
    const TableRow& r = table.find(row, quantity);
    if (r.failed) return check(name, false, "error: " + r.error);
    const double dev = relative ? r.rel_deviation() : r.abs_deviation();
    return check(name, dev <= tolerance,
                 "computed " + num(r.computed) + " reference " +
                     num(r.reference) + (relative ? " rel dev " : " abs dev ") +
                     num(dev) + " tol " + num(tolerance));
  } catch (const std::exception& e) {
    return check(name, false, e.what());
  }
}

double computed(const TableResult& table, const std::string& row,
                const std::string& quantity) {
  const TableRow& r = table.find(row, quantity);
  if (r.failed) throw NumericalError(r.error);
  return r.computed;
}

template <typename F>
CheckResult guarded(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return check(name, false, std::string("error: ") + e.what());
  }
}

const std::vector<std::string>& time_labels_7() {
  static const std::vector<std::string> t = {"0.074", "0.222", "0.370"};
  return t;
}

const std::vector<std::string>& time_labels_9() {
  static const std::vector<std::string> t = {"0.085", "0.170", "0.255"};
  return t;
}

}  // namespace

CriterionResult table3_criterion() {
  const TableResult t = cli::run_table(3);
  std::vector<CheckResult> checks;
  for (const char* row : {"case1", "case2", "case3"}) {
    checks.push_back(row_within(t, row, "rho_theo", 5e-6, false));
    checks.push_back(row_within(t, row, "rho_num", 1e-4, false));
  }
  return finish(1, "Table 3 classic contraction, theory and measurement",
                std::move(checks));
}

CriterionResult table5_criterion() {
  const TableResult t = cli::run_table(5);
  std::vector<CheckResult> checks;
  for (const char* row : {"case1", "case2", "case3"}) {
    checks.push_back(row_within(t, row, "alpha", 1e-4, true));
    checks.push_back(row_within(t, row, "beta", 1e-4, true));
    const std::string base = std::string("table5 ") + row;
    checks.push_back(guarded(base + " |rho_num| <= 1e-10", [&] {
      const double rho = computed(t, row, "rho_num");
      return check(base + " |rho_num| <= 1e-10", std::abs(rho) <= 1e-10,
                   "rho_num " + num(rho));
    }));
    checks.push_back(guarded(base + " outer iterations <= 3", [&] {
      const double m = computed(t, row, "outer_to_1e-12");
      return check(base + " outer iterations <= 3", m <= 3,
                   "error below 1e-12 after " + num(m) + " outer iterations");
    }));
  }
  return finish(2, "Table 5 optimal parameters and perfect convergence",
                std::move(checks));
}

CriterionResult table2_criterion() {
  const TableResult t = cli::run_table(2);
  std::vector<CheckResult> checks;
  for (const char* row : {"case1", "case2", "case3"}) {
    for (const char* q : {"rho_omega0", "rho_omega1"}) {
      checks.push_back(row_within(t, row, q, 1e-4, false));
    }
  }
  return finish(3, "Table 2 Jacobi iteration-matrix spectral radii",
                std::move(checks));
}

CriterionResult table7_criterion() {
  const TableResult t = cli::run_table(7);
  std::vector<CheckResult> checks;
  for (const char* id : {"4", "5", "6", "7"}) {
    for (const std::string& time : time_labels_7()) {
      const std::string jacobi = std::string("jacobi-") + id;
      checks.push_back(row_within(t, jacobi, "K_t" + time, 1e-4, false));
      for (const std::string& row : {jacobi, std::string("ac-") + id}) {
        const std::string name = "table7 " + row + " rho <= K at t=" + time;
        checks.push_back(guarded(name, [&] {
          const double k = computed(t, row, "K_t" + time);
          const double rho = computed(t, row, "rho_t" + time);
          return check(name, rho <= k, "rho " + num(rho) + " K " + num(k));
        }));
      }
    }
  }
  return finish(4, "Table 7 Burgers Scarborough values and rho <= K",
                std::move(checks));
}

CriterionResult burgers_tables_criterion() {
  const TableResult t9 = cli::run_table(9);
  const TableResult t10 = cli::run_table(10);
  std::vector<CheckResult> checks;
  checks.push_back(row_within(t9, "case4", "theo_t0.085", 1e-4, false));
  checks.push_back(row_within(t9, "case5", "theo_t0.085", 1e-4, false));
  for (const char* row : {"case6", "case7"}) {
    for (const std::string& time : time_labels_9()) {
      const std::string name =
          std::string("table9 ") + row + " |theo - num| <= 2e-2 at t=" + time;
      checks.push_back(guarded(name, [&] {
        const double theo = computed(t9, row, "theo_t" + time);
        const double measured = computed(t9, row, "num_t" + time);
        return check(name, std::abs(theo - measured) <= 2e-2,
                     "theo " + num(theo) + " num " + num(measured));
      }));
    }
  }
  for (const char* row : {"case4", "case5"}) {
    for (const std::string& time : time_labels_9()) {
      const std::string name =
          std::string("table10 ") + row + " |rho_num| <= 1e-10 at t=" + time;
      checks.push_back(guarded(name, [&] {
        const double rho = computed(t10, row, "rho_num_t" + time);
        return check(name, std::abs(rho) <= 1e-10, "rho_num " + num(rho));
      }));
    }
  }
  return finish(5, "Tables 9-10 Burgers contraction and optimal runs",
                std::move(checks));
}

CriterionResult strategy_criterion() {
  std::vector<CheckResult> checks;
  const std::vector<std::string> loads = {"load_1to1", "load_1to5",
                                          "load_1to15", "load_converge"};
  auto ordering = [&](const TableResult& t, const std::string& row) {
    const std::string name = "table" + std::to_string(t.table) + " " + row +
                             " strict load ordering";
    return guarded(name, [&] {
      std::string detail;
      bool ok = true;
      double previous = -1.0;
      for (const std::string& q : loads) {
        const double v = computed(t, row, q);
        ok = ok && v > previous;
        previous = v;
        detail += (detail.empty() ? "" : " < ") + num(v);
      }
      return check(name, ok, detail);
    });
  };
  const TableResult t4 = cli::run_table(4);
  const TableResult t8 = cli::run_table(8);
  for (const char* row : {"case1", "case2", "case3"}) {
    checks.push_back(ordering(t4, row));
  }
  for (const char* row : {"case4", "case5", "case6", "case7"}) {
    checks.push_back(ordering(t8, row));
  }
  for (const std::string& q : loads) {
    checks.push_back(row_within(t4, "case1", q, 0.25, true));
    checks.push_back(row_within(t8, "case4", q, 0.25, true));
  }
  return finish(6, "Tables 4/8 inner/outer strategy loads", std::move(checks));
}

std::vector<CheckResult> scarborough_bound_property(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(4, 24);
  std::uniform_real_distribution<double> eta(-1.0, 1.0);
  std::uniform_real_distribution<double> eps(0.0, 2.0);
  std::uniform_real_distribution<double> gamma(0.0, 1.0);
  std::uniform_real_distribution<double> log_kappa(-2.0, 2.0);
  std::vector<CheckResult> out;
  const auto cond = InterfaceCondition::classic_same_level();
  for (ExplicitScheme scheme :
       {ExplicitScheme::Jacobi, ExplicitScheme::ArtificialCompressibility}) {
    const bool ac = scheme == ExplicitScheme::ArtificialCompressibility;
    int accepted = 0;
    int violations = 0;
    double worst = -1.0;
    for (int attempt = 0; attempt < 100000 && accepted < 200; ++attempt) {
      const int I = size(rng);
      const int J = size(rng);
      const double e1 = eta(rng), d1 = eps(rng), g1 = gamma(rng);
      const double e2 = eta(rng), d2 = eps(rng), g2 = gamma(rng);
      const double kappa = ac ? std::pow(10.0, log_kappa(rng)) : 0.0;
      const SchemeCoefficients c =
          uniform_coefficients(I, J, e1, d1, g1, e2, d2, g2, kappa);
      const double k = ac ? scarborough_lhs_ac(c) : scarborough_lhs_explicit(c);
      if (!(k < 1.0)) continue;
      ++accepted;
      const double rho =
          spectral_radius(assemble_iteration_matrix(c, cond, scheme));
      worst = std::max(worst, rho - k);
      if (rho > k * (1.0 + 1e-12)) ++violations;
    }
    const std::string name =
        std::string("7a rho <= K, ") + (ac ? "artificial compressibility" : "Jacobi");
    out.push_back(check(name, accepted == 200 && violations == 0,
                        std::to_string(accepted) + " draws with K<1, " +
                            std::to_string(violations) +
                            " violations, max(rho-K) " + num(worst)));
  }
  return out;
}

std::vector<CheckResult> contraction_matches_measurement(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> advection(-1.0, 1.0);
  std::uniform_real_distribution<double> diffusion(0.001, 0.5);
  std::uniform_real_distribution<double> reaction(0.0, 1.0);
  std::uniform_real_distribution<double> ratio(0.2, 2.0);
  std::vector<CheckResult> out;
  const std::vector<std::pair<int, int>> sizes = {{3, 3}, {5, 7}, {10, 20}};
  for (const auto& [I, J] : sizes) {
    const std::string name = "7b recursive contraction vs measured ratio, (" +
                             std::to_string(I) + "," + std::to_string(J) + ")";
    int tested = 0;
    double worst = 0.0;
    std::string error;
    for (int attempt = 0; attempt < 200 && tested < 5; ++attempt) {
      CoupledProblem p;
      p.a1 = advection(rng);
      p.b1 = diffusion(rng);
      p.c1 = reaction(rng);
      p.a2 = advection(rng);
      p.b2 = diffusion(rng);
      p.c2 = reaction(rng);
      const GridPair grid = make_grid_pair(I, J, ratio(rng));
      try {
        const SchemeCoefficients c = compute_coefficients(p, grid, 0.0);
        const double theory = contraction_classic(recursion_tables(c), c);
        if (std::abs(theory) < 1e-3) continue;
        SolverSettings s;
        s.scheme = SchemeKind::Implicit;
        s.interface = InterfaceCondition::classic_lagged();
        const StepResult step =
            solve_time_step(initial_condition(p, grid), p, grid, s);
        if (step.trace.ratios.empty()) continue;
        const double measured = step.trace.ratios.front();
        worst = std::max(worst, std::abs(measured - theory) / std::abs(theory));
        ++tested;
      } catch (const std::exception& e) {
        error = e.what();
      }
    }
    out.push_back(check(name, tested == 5 && worst <= 1e-8,
                        std::to_string(tested) + " draws, max rel dev " +
                            num(worst) + (error.empty() ? "" : "; " + error)));
  }
  return out;
}

std::vector<CheckResult> optimum_is_saddle() {
  std::vector<CheckResult> out;
  const GridPair grid = make_grid_pair(40, 80, 1.0);
  for (const char* id : {"1", "2", "3i"}) {
    const std::string name = std::string("7c saddle at the optimum, case ") + id;
    out.push_back(guarded(name, [&] {
      const CoupledProblem& p = cli::require_case(id).problem;
      const SchemeCoefficients c = compute_coefficients(p, grid, 0.0);
      const RecursionTable table = recursion_tables(c);
      const OptimalParams opt = optimal_params(table, c);
      const SaddleDifferences d = saddle_differences(
          [&](double a, double b) {
            return contraction_optimal(table, c, a, b);
          },
          opt.alpha, opt.beta, 1e-4);
      const double scale = std::max(1.0, std::abs(d.d_alpha_beta));
      const double worst =
          std::max({std::abs(d.d_alpha), std::abs(d.d_beta),
                    std::abs(d.d_alpha_alpha), std::abs(d.d_beta_beta)}) /
          scale;
      return check(name, worst <= 1e-6 && std::abs(d.d_alpha_beta) > 1e-6,
                   "max scaled first/pure-second difference " + num(worst) +
                       ", mixed " + num(d.d_alpha_beta));
    }));
  }
  return out;
}

std::vector<CheckResult> thomas_matches_dense(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 1);
  std::uniform_int_distribution<int> size(1, 60);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_real_distribution<double> margin(0.1, 1.0);
  double worst = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const int n = size(rng);
    TridiagonalSystem sys(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0) sys.lower[i] = value(rng);
      if (i + 1 < n) sys.upper[i] = value(rng);
      const double off = std::abs(sys.lower[i]) + std::abs(sys.upper[i]);
      sys.diag[i] = (value(rng) < 0 ? -1.0 : 1.0) * (off + margin(rng));
      sys.rhs[i] = value(rng);
    }
    const std::vector<double> x = thomas_solve(sys);
    const std::vector<double> y = dense_solve(to_dense(sys), sys.rhs);
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(x[i] - y[i]) / std::max(1.0, std::abs(y[i])));
    }
  }
  return {check("7d thomas_solve vs dense elimination", worst <= 1e-10,
                "100 systems, max deviation " + num(worst))};
}

std::vector<CheckResult> tridiag_eigenvalues_match_dense(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 2);
  std::uniform_int_distribution<int> size(1, 40);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_real_distribution<double> magnitude(0.05, 1.0);
  double worst = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const int n = size(rng);
    const double lo = magnitude(rng) * (value(rng) < 0 ? -1.0 : 1.0);
    const double hi = std::copysign(magnitude(rng), lo);
    const double mid = value(rng);
    std::vector<double> fast = tridiag_eigenvalues(lo, mid, hi, n);
    // The diagonal similarity with d_i = (lo/hi)^(i/2) symmetrizes the
    // matrix without changing its spectrum; the symmetric solve is well
    // conditioned where the nonsymmetric one is not.
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = std::pow(lo / hi, 0.5 * i);
    const DenseMatrix balanced =
        diagonal_similarity(toeplitz_tridiagonal(lo, mid, hi, n), d);
    DenseMatrix symmetric = balanced;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        symmetric[r][c] = 0.5 * (balanced[r][c] + balanced[c][r]);
        worst = std::max(worst, std::abs(balanced[r][c] - balanced[c][r]));
      }
    }
    std::vector<double> dense = dense_symmetric_eigenvalues(symmetric);
    std::sort(fast.begin(), fast.end());
    std::sort(dense.begin(), dense.end());
    for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(fast[i] - dense[i]));
  }
  return {check("7e tridiag_eigenvalues vs dense eigensolve", worst <= 1e-10,
                "100 matrices, max deviation " + num(worst))};
}

std::vector<CheckResult> burgers_reduces_to_linear(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 3);
  std::uniform_real_distribution<double> level(-1.0, 1.0);
  std::uniform_real_distribution<double> diffusion(0.01, 0.5);
  std::uniform_real_distribution<double> reaction(0.0, 1.0);
  double worst = 0.0;
  std::string error;
  int tested = 0;
  for (int draw = 0; draw < 20; ++draw) {
    const double u = level(rng);
    CoupledProblem burgers;
    burgers.flux = FluxKind::Burgers;
    burgers.b1 = diffusion(rng);
    burgers.c1 = reaction(rng);
    burgers.b2 = diffusion(rng);
    burgers.c2 = reaction(rng);
    burgers.left_bc = u;
    burgers.right_bc = u;
    CoupledProblem linear = burgers;
    linear.flux = FluxKind::Linear;
    linear.a1 = u;
    linear.a2 = u;
    const GridPair grid = make_grid_pair(10, 20, 1.0);
    SolutionField state = initial_condition(linear, grid);
    for (int i = 1; i <= grid.I; ++i) state.u1(i) = u;
    for (int j = 1; j <= grid.J; ++j) state.u2(j) = u;
    try {
      const SchemeCoefficients cb = compute_coefficients(burgers, grid, 0.5, &state);
      const SchemeCoefficients cl = compute_coefficients(linear, grid, 0.5, &state);
      for (int k = 1; k <= 2; ++k) {
        const NodeArray& fb = cb.sub(k).eta_field;
        const NodeArray& fl = cl.sub(k).eta_field;
        for (int i = 1; i <= fb.size(); ++i) {
          worst = std::max(worst, std::abs(fb(i) - fl(i)));
        }
      }
      const auto cond = InterfaceCondition::classic_same_level();
      for (ExplicitScheme s :
           {ExplicitScheme::Jacobi, ExplicitScheme::ArtificialCompressibility}) {
        const IterationMatrix mb = assemble_iteration_matrix(cb, cond, s);
        const IterationMatrix ml = assemble_iteration_matrix(cl, cond, s);
        for (std::size_t i = 0; i < mb.values.size(); ++i) {
          worst = std::max(worst, std::abs(mb.values[i] - ml.values[i]));
        }
      }
      worst = std::max(worst,
                       std::abs(contraction_classic(recursion_tables(cb), cb) -
                                contraction_classic(recursion_tables(cl), cl)));
      SolverSettings s;
      s.scheme = SchemeKind::Implicit;
      s.interface = InterfaceCondition::classic_lagged();
      s.burgers_mode = BurgersMode::TimeLevel;
      const StepResult rb = solve_time_step(state, burgers, grid, s);
      const StepResult rl = solve_time_step(state, linear, grid, s);
      worst = std::max(worst, max_difference(rb.solution, rl.solution));
      ++tested;
    } catch (const std::exception& e) {
      error = e.what();
    }
  }
  return {check("7f Burgers with constant state reduces to linear",
                tested == 20 && worst <= 1e-12,
                std::to_string(tested) + " draws, max deviation " + num(worst) +
                    (error.empty() ? "" : "; " + error))};
}

CriterionResult property_criterion(std::uint64_t seed) {
  std::vector<CheckResult> checks;
  auto append = [&](std::vector<CheckResult> more) {
    for (CheckResult& c : more) checks.push_back(std::move(c));
  };
  append(scarborough_bound_property(seed));
  append(contraction_matches_measurement(seed));
  append(optimum_is_saddle());
  append(thomas_matches_dense(seed));
  append(tridiag_eigenvalues_match_dense(seed));
  append(burgers_reduces_to_linear(seed));
  return finish(7, "property suite (seed " + std::to_string(seed) + ")",
                std::move(checks));
}

CriterionResult figure_criterion() {
  std::vector<CheckResult> checks;
  for (const char* id : {"1", "2", "3"}) {
    const std::string name = std::string("kappa sweep case ") + id +
                             " argmin K and argmin rho within one cell";
    checks.push_back(guarded(name, [&] {
      cli::ExperimentConfig config;
      config.case_id = id;
      config.problem = cli::require_case(id).problem;
      config.dt_over_dx = 1.0;
      config.scheme = SchemeKind::ArtificialCompressibility;
      config.kappa = 1.0;
      const cli::KappaSweepResult r =
          cli::sweep_kappa(config, cli::kappa_grid(config));
      if (r.argmin_K < 0 || r.argmin_rho < 0) {
        return check(name, false, "no valid sweep rows");
      }
      return check(name, std::abs(r.argmin_K - r.argmin_rho) <= 1,
                   "argmin K at kappa " + num(r.rows[r.argmin_K].kappa) +
                       " (index " + std::to_string(r.argmin_K) +
                       "), argmin rho at kappa " +
                       num(r.rows[r.argmin_rho].kappa) + " (index " +
                       std::to_string(r.argmin_rho) + ")");
    }));
  }
  for (const char* id : {"1", "2"}) {
    const bool increasing = std::string(id) == "1";
    const std::string name =
        std::string("mesh sweep case ") + id +
        (increasing ? " radius increasing in N" : " radius non-increasing in N");
    checks.push_back(guarded(name, [&] {
      cli::ExperimentConfig config;
      config.case_id = id;
      config.problem = cli::require_case(id).problem;
      config.dt_over_dx = 0.5;
      config.scheme = SchemeKind::Jacobi;
      config.interface = InterfaceKind::ClassicSameLevel;
      const cli::MeshSweepResult r = cli::sweep_mesh(config, config.mesh_pairs);
      bool ok = true;
      std::string detail;
      for (std::size_t i = 0; i < r.rows.size(); ++i) {
        ok = ok && r.rows[i].flag.empty();
        if (i > 0) {
          const double prev = r.rows[i - 1].rho;
          const double cur = r.rows[i].rho;
          ok = ok && (increasing ? cur > prev : cur <= prev);
        }
        detail += (i ? " " : "") + std::string("N=") +
                  std::to_string(r.rows[i].N) + ":" + num(r.rows[i].rho);
      }
      return check(name, ok, detail);
    }));
  }
  return finish(8, "kappa and mesh sweeps", std::move(checks));
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(table3_criterion());
  out.push_back(table5_criterion());
  out.push_back(table2_criterion());
  out.push_back(table7_criterion());
  out.push_back(burgers_tables_criterion());
  out.push_back(strategy_criterion());
  out.push_back(property_criterion(seed));
  out.push_back(figure_criterion());
  return out;
}

std::string format_criterion(const CriterionResult& result, bool verbose) {
  std::ostringstream os;
  os << (result.passed ? "PASS" : "FAIL") << " [" << result.id << "] "
     << result.name << '\n';
  for (const CheckResult& c : result.checks) {
    if (!verbose && c.passed) continue;
    os << "    " << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail
       << '\n';
  }
  return os.str();
}

}  // namespace schwarz1d::validation
