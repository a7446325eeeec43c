#include "schwarz1d/cli/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "schwarz1d/cli/cases.hpp"
#include "schwarz1d/cli/reference.hpp"

namespace schwarz1d::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs f(0..n-1); with concurrent set the indices are spread over threads.
// f must not throw.
void for_each_index(int n, bool concurrent, const std::function<void(int)>& f) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = std::min<int>(n, static_cast<int>(hw));
  if (!concurrent || workers < 2) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) f(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

std::string label(double t) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.3f", t);
  return buf;
}

class TableBuilder {
 public:
  explicit TableBuilder(TableResult& result) : result_(result) {}

  void add(const std::string& row, const std::string& quantity,
           const std::function<double()>& compute, std::string note = {}) {
    const ReferenceValue& ref = reference(result_.table, row, quantity);
    TableRow out;
    out.table = result_.table;
    out.row = row;
    out.quantity = quantity;
    out.reference = ref.value;
    out.tolerance = ref.tolerance;
    out.relative = ref.relative;
    out.note = std::move(note);
    try {
      out.computed = compute();
    } catch (const std::exception& e) {
      out.failed = true;
      out.computed = kNaN;
      out.error = e.what();
    }
    result_.rows.push_back(std::move(out));
  }

 private:
  TableResult& result_;
};

SolverSettings implicit_settings(InterfaceCondition cond, BurgersMode mode) {
  SolverSettings s;
  s.scheme = SchemeKind::Implicit;
  s.interface = cond;
  s.burgers_mode = mode;
  s.convention = endpoint_calibration().selected;
  return s;
}

int label_step(double t, const GridPair& grid) {
  return static_cast<int>(std::lround(t / grid.dt));
}

void common_decisions(Decisions& d) {
  d["endpoint_convention"] = to_string(endpoint_calibration().selected);
  d["initial_guess"] = "u^n";
  d["outer_residual"] = "max-norm change + overlap mismatch";
  d["rho_num"] =
      "geometric mean of <e^{m+2},e^m>/<e^m,e^m> for m>=1 while "
      "|e^{m+2}| >= 1e-5 |e^1| and |e^m| > 100 eps";
  d["reference_data_version"] = std::to_string(reference_version());
}

void table2(TableResult& r) {
  TableBuilder b(r);
  const GridPair grid = make_grid_pair(40, 80, 0.5);
  for (const char* id : {"1", "2", "3"}) {
    const CoupledProblem& problem = require_case(id).problem;
    const SchemeCoefficients coeffs = compute_coefficients(problem, grid, 0.0);
    const std::string row = std::string("case") + id;
    b.add(row, "rho_omega0", [&] {
      return spectral_radius(assemble_iteration_matrix(
          coeffs, InterfaceCondition::classic_lagged(), ExplicitScheme::Jacobi));
    });
    b.add(row, "rho_omega1", [&] {
      return spectral_radius(assemble_iteration_matrix(
          coeffs, InterfaceCondition::classic_same_level(),
          ExplicitScheme::Jacobi));
    });
  }
  r.decisions["table2.grid"] = "I=40 J=80 dt_over_dx=0.5";
}

void table3(TableResult& r) {
  TableBuilder b(r);
  const GridPair grid = make_grid_pair(40, 80, 1.0);
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"case1", "1"}, {"case2", "2"}, {"case3", "3i"}};
  for (const auto& [row, id] : rows) {
    const CoupledProblem& problem = require_case(id).problem;
    const std::string note = "case " + id;
    b.add(row, "rho_theo", [&] {
      const SchemeCoefficients coeffs =
          compute_coefficients(problem, grid, 0.0);
      return contraction_classic(
          recursion_tables(coeffs, endpoint_calibration().selected), coeffs);
    }, note);
    b.add(row, "rho_num", [&] {
      const StepResult step = solve_time_step(
          initial_condition(problem, grid), problem, grid,
          implicit_settings(InterfaceCondition::classic_lagged(),
                            BurgersMode::LaggedIterate));
      if (!step.trace.converged) throw NumericalError("solve did not converge");
      return step.trace.rho_num;
    }, note);
  }
  r.decisions["table3.grid"] = "I=40 J=80 dt_over_dx=1";
  r.decisions["table3.case3"] = "coefficients of case 3i";
}

long strategy_load(const SolutionField& u_n, const CoupledProblem& problem,
                   const GridPair& grid, const Strategy& strategy) {
  SolverSettings s;
  s.scheme = SchemeKind::Jacobi;
  s.interface = InterfaceCondition::classic_same_level();
  s.strategy = strategy;
  s.track_errors = false;
  const StepResult step = solve_time_step(u_n, problem, grid, s);
  if (!step.trace.converged) {
    throw NumericalError("outer iteration did not converge");
  }
  return step.trace.total_load;
}

void strategy_rows(TableBuilder& b, const std::string& row,
                   const SolutionField& u_n, const CoupledProblem& problem,
                   const GridPair& grid) {
  const std::vector<std::pair<std::string, Strategy>> strategies = {
      {"load_1to1", Strategy::one_to_one()},
      {"load_1to5", Strategy::fixed_inner(5)},
      {"load_1to15", Strategy::fixed_inner(15)},
      {"load_converge", Strategy::to_convergence()}};
  for (const auto& [quantity, strategy] : strategies) {
    b.add(row, quantity, [&] {
      return static_cast<double>(strategy_load(u_n, problem, grid, strategy));
    });
  }
}

void table4(TableResult& r) {
  TableBuilder b(r);
  const GridPair grid = make_grid_pair(40, 80, 0.5);
  for (const char* id : {"1", "2", "3"}) {
    const CoupledProblem& problem = require_case(id).problem;
    strategy_rows(b, std::string("case") + id,
                  initial_condition(problem, grid), problem, grid);
  }
  r.decisions["table4.grid"] = "I=40 J=80 dt_over_dx=0.5";
  r.decisions["table4.step"] = "first step from t=0";
  r.decisions["table4.interface"] = "same-level";
  r.decisions["table4.fixed_inner"] =
      "up to L sweeps, early stop when the sweep change <= inner_tol";
}

void table5(TableResult& r) {
  TableBuilder b(r);
  const GridPair grid = make_grid_pair(40, 80, 1.0);
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"case1", "1"}, {"case2", "2"}, {"case3", "3i"}};
  for (const auto& [row, id] : rows) {
    const CoupledProblem& problem = require_case(id).problem;
    const std::string note = "case " + id;
    const SolutionField u0 = initial_condition(problem, grid);
    auto params = [&] {
      return predicted_optimal(u0, problem, grid,
                               endpoint_calibration().selected);
    };
    auto solve = [&] {
      const OptimalParams p = params();
      StepResult step = solve_time_step(
          u0, problem, grid,
          implicit_settings(InterfaceCondition::optimal(p.alpha, p.beta),
                            BurgersMode::LaggedIterate));
      if (!step.trace.converged) throw NumericalError("solve did not converge");
      return step.trace;
    };
    b.add(row, "alpha", [&] { return params().alpha; }, note);
    b.add(row, "beta", [&] { return params().beta; }, note);
    b.add(row, "rho_num", [&] { return solve().rho_num; }, note);
    b.add(row, "outer_to_1e-12", [&] {
      const IterationTrace trace = solve();
      for (std::size_t m = 0; m < trace.error_max.size(); ++m) {
        if (trace.error_max[m] <= 1e-12) return static_cast<double>(m + 1);
      }
      throw NumericalError("error never fell below 1e-12");
    }, note);
  }
  r.decisions["table5.grid"] = "I=40 J=80 dt_over_dx=1";
  r.decisions["table5.case3"] = "coefficients of case 3i";
}

double table7_kappa(const std::string& id) {
  if (id == "4") return 1.350;
  if (id == "5") return 0.069;
  if (id == "6") return 0.542;
  return 1.378;
}

void table7(TableResult& r) {
  TableBuilder b(r);
  const GridPair grid = make_grid_pair(10, 20, 0.1);
  const std::vector<double> times = {0.074, 0.222, 0.370};
  for (const char* id : {"4", "5", "6", "7"}) {
    const CoupledProblem& problem = require_case(id).problem;
    const std::vector<SolutionField> series = reference_march(
        problem, grid, label_step(times.back(), grid),
        BurgersMode::LaggedIterate);
    const double kappa = table7_kappa(id);
    for (double t : times) {
      const SolutionField& state = series[label_step(t, grid)];
      const SchemeCoefficients coeffs =
          compute_coefficients(problem, grid, kappa, &state);
      const std::string suffix = "_t" + label(t);
      const auto same_level = InterfaceCondition::classic_same_level();
      b.add(std::string("jacobi-") + id, "K" + suffix,
            [&] { return scarborough_lhs_explicit(coeffs); });
      b.add(std::string("jacobi-") + id, "rho" + suffix, [&] {
        return spectral_radius(assemble_iteration_matrix(
            coeffs, same_level, ExplicitScheme::Jacobi));
      });
      b.add(std::string("ac-") + id, "K" + suffix,
            [&] { return scarborough_lhs_ac(coeffs); });
      b.add(std::string("ac-") + id, "rho" + suffix, [&] {
        return spectral_radius(assemble_iteration_matrix(
            coeffs, same_level, ExplicitScheme::ArtificialCompressibility));
      });
    }
  }
  r.decisions["table7.grid"] = "I=10 J=20 dt_over_dx=0.1";
  r.decisions["table7.time_label"] = "state u^n with n = round(t/dt)";
  r.decisions["table7.kappa"] = "4:1.350 5:0.069 6:0.542 7:1.378";
  r.decisions["table7.interface"] = "same-level";
}

void table8(TableResult& r) {
  TableBuilder b(r);
  const GridPair grid = make_grid_pair(10, 20, 0.1);
  const int target = label_step(0.170, grid);
  for (const char* id : {"4", "5", "6", "7"}) {
    const CoupledProblem& problem = require_case(id).problem;
    const SolutionField u_n =
        state_at_step(problem, grid, target - 1, BurgersMode::LaggedIterate);
    strategy_rows(b, std::string("case") + id, u_n, problem, grid);
  }
  r.decisions["table8.grid"] = "I=10 J=20 dt_over_dx=0.1";
  r.decisions["table8.step"] = "step ending at n = round(0.170/dt)";
  r.decisions["table8.interface"] = "same-level";
  r.decisions["table8.eta"] = "lagged from the previous inner iterate";
}

const std::vector<std::pair<std::string, std::string>>& burgers_rows() {
  static const std::vector<std::pair<std::string, std::string>> rows = {
      {"case4", "4"}, {"case5", "5i"}, {"case6", "6"}, {"case7", "7"}};
  return rows;
}

void table9(TableResult& r) {
  TableBuilder b(r);
  const GridPair grid = make_grid_pair(40, 80, 1.0);
  const std::vector<double> times = {0.085, 0.170, 0.255};
  for (const auto& [row, id] : burgers_rows()) {
    const CoupledProblem& problem = require_case(id).problem;
    const std::vector<SolutionField> series =
        reference_march(problem, grid, label_step(times.back(), grid),
                        BurgersMode::LaggedIterate);
    const std::string note = "case " + id;
    for (double t : times) {
      const SolutionField& u_n = series[label_step(t, grid) - 2];
      b.add(row, "theo_t" + label(t), [&] {
        const SchemeCoefficients coeffs =
            compute_coefficients(problem, grid, 0.0, &u_n);
        return contraction_classic(
            recursion_tables(coeffs, endpoint_calibration().selected), coeffs);
      }, note);
      b.add(row, "num_t" + label(t), [&] {
        const StepResult step = solve_time_step(
            u_n, problem, grid,
            implicit_settings(InterfaceCondition::classic_lagged(),
                              BurgersMode::LaggedIterate));
        if (!step.trace.converged) {
          throw NumericalError("solve did not converge");
        }
        return step.trace.rho_num;
      }, note);
    }
  }
  r.decisions["table9.grid"] = "I=40 J=80 dt_over_dx=1";
  r.decisions["table9.time_label"] = "linearization state u^n, n = round(t/dt) - 2";
  r.decisions["table9.case5"] = "coefficients of case 5i";
  r.decisions["table9.num"] = "eta lagged from the previous outer iterate";
}

void table10(TableResult& r) {
  TableBuilder b(r);
  const GridPair grid = make_grid_pair(40, 80, 1.0);
  const std::vector<double> times = {0.085, 0.170, 0.255};
  const EndpointConvention convention = endpoint_calibration().selected;
  for (const auto& [row, id] : burgers_rows()) {
    const CoupledProblem& problem = require_case(id).problem;
    const std::vector<SolutionField> series =
        reference_march(problem, grid, label_step(times.back(), grid),
                        BurgersMode::LaggedIterate);
    for (double t : times) {
      const SolutionField& u_n = series[label_step(t, grid) - 1];
      const std::string suffix = "_t" + label(t);
      auto run = [&](BurgersMode mode) {
        SolverSettings s =
            implicit_settings(InterfaceCondition::optimal(0.0, 0.0), mode);
        s.auto_optimal = true;
        StepResult step = solve_time_step(u_n, problem, grid, s);
        if (!step.trace.converged) {
          throw NumericalError("solve did not converge");
        }
        return step.trace.rho_num;
      };
      std::string note = "case " + id;
      try {
        note += "; eta lagged from the iterate gives rho_num " +
                format_number(run(BurgersMode::LaggedIterate));
      } catch (const std::exception& e) {
        note += std::string("; lagged run failed: ") + e.what();
      }
      b.add(row, "alpha" + suffix, [&] {
        return predicted_optimal(u_n, problem, grid, convention).alpha;
      }, "case " + id);
      b.add(row, "beta" + suffix, [&] {
        return predicted_optimal(u_n, problem, grid, convention).beta;
      }, "case " + id);
      b.add(row, "rho_num" + suffix,
            [&] { return run(BurgersMode::TimeLevel); }, note);
    }
  }
  r.decisions["table10.grid"] = "I=40 J=80 dt_over_dx=1";
  r.decisions["table10.time_label"] = "state u^n, n = round(t/dt) - 1";
  r.decisions["table10.case5"] = "coefficients of case 5i";
  r.decisions["table10.num"] =
      "eta from u^n (linearized), optimal parameters from the same state";
}

}  // namespace

double TableRow::abs_deviation() const { return std::abs(computed - reference); }

double TableRow::rel_deviation() const {
  return reference == 0.0 ? kNaN : abs_deviation() / std::abs(reference);
}

bool TableRow::within_tolerance() const {
  if (failed || !std::isfinite(computed)) return false;
  const double dev = relative ? rel_deviation() : abs_deviation();
  return dev <= tolerance * (1.0 + 1e-9);
}

std::string TableRow::status() const {
  if (failed) return "error: " + error;
  return within_tolerance() ? "ok" : "deviation";
}

const TableRow& TableResult::find(const std::string& row,
                                  const std::string& quantity) const {
  for (const TableRow& r : rows) {
    if (r.row == row && r.quantity == quantity) return r;
  }
  throw InvalidInput("table " + std::to_string(table) + " has no row " + row +
                     "/" + quantity);
}

CsvTable TableResult::csv() const {
  CsvTable out({"table", "row", "quantity", "reference", "computed",
                "abs_deviation", "rel_deviation", "tolerance",
                "tolerance_kind", "status", "note"});
  for (const TableRow& r : rows) {
    out.add_row({static_cast<long long>(r.table), r.row, r.quantity,
                 r.reference, r.computed, r.abs_deviation(),
                 r.rel_deviation(), r.tolerance,
                 std::string(r.relative ? "rel" : "abs"), r.status(), r.note});
  }
  return out;
}

const std::vector<int>& supported_tables() {
  static const std::vector<int> ids = {2, 3, 4, 5, 7, 8, 9, 10};
  return ids;
}

TableResult run_table(int id) {
  TableResult r;
  r.table = id;
  switch (id) {
    case 2: table2(r); break;
    case 3: table3(r); break;
    case 4: table4(r); break;
    case 5: table5(r); break;
    case 7: table7(r); break;
    case 8: table8(r); break;
    case 9: table9(r); break;
    case 10: table10(r); break;
    default:
      throw InvalidInput("unsupported table id " + std::to_string(id));
  }
  common_decisions(r.decisions);
  return r;
}

const ConventionCalibration& endpoint_calibration() {
  static const ConventionCalibration calibration = [] {
    std::vector<CoupledProblem> problems;
    for (const char* id : {"1", "2", "3"}) {
      problems.push_back(require_case(id).problem);
    }
    return calibrate_endpoint_convention(problems,
                                         make_grid_pair(10, 20, 1.0));
  }();
  return calibration;
}

SolutionField state_at_step(const CoupledProblem& problem,
                            const GridPair& grid, int step, BurgersMode mode) {
  if (step < 0) throw InvalidInput("step must be nonnegative");
  return reference_march(problem, grid, step, mode).back();
}

namespace {

SolutionField analysis_state(const ExperimentConfig& config,
                             const GridPair& grid) {
  if (config.problem.flux != FluxKind::Burgers) {
    return initial_condition(config.problem, grid);
  }
  return state_at_step(config.problem, grid, config.resolved_steps(),
                       config.burgers_mode);
}

void sweep_decisions(const ExperimentConfig& config, Decisions& d) {
  if (config.problem.flux == FluxKind::Burgers) {
    d["burgers_state"] = "u^n at n = " + std::to_string(config.resolved_steps());
  }
  d["interface"] = to_string(config.interface);
}

}  // namespace

std::vector<double> kappa_grid(const ExperimentConfig& config) {
  const int n = config.kappa_points;
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = config.kappa_min;
    return out;
  }
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / (n - 1);
    out[i] = config.kappa_log
                 ? config.kappa_min *
                       std::pow(config.kappa_max / config.kappa_min, s)
                 : config.kappa_min + s * (config.kappa_max - config.kappa_min);
  }
  return out;
}

CsvTable KappaSweepResult::csv() const {
  CsvTable out({"kappa", "K", "rho", "argmin_K", "argmin_rho", "flag"});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const KappaRow& r = rows[i];
    out.add_row({r.kappa, r.K, r.rho,
                 static_cast<long long>(static_cast<int>(i) == argmin_K),
                 static_cast<long long>(static_cast<int>(i) == argmin_rho),
                 r.flag});
  }
  return out;
}

KappaSweepResult sweep_kappa(const ExperimentConfig& config,
                             const std::vector<double>& kappas) {
  if (config.scheme != SchemeKind::ArtificialCompressibility) {
    throw InvalidInput("sweep_kappa requires scheme=ac");
  }
  const GridPair grid = config.grid();
  const SolutionField state = analysis_state(config, grid);
  const InterfaceCondition cond = config.interface_condition();
  KappaSweepResult out;
  out.rows.resize(kappas.size());
  for_each_index(static_cast<int>(kappas.size()), config.concurrent,
                 [&](int i) {
    KappaRow& row = out.rows[i];
    row.kappa = kappas[i];
    row.K = kNaN;
    row.rho = kNaN;
    try {
      const SchemeCoefficients coeffs =
          compute_coefficients(config.problem, grid, kappas[i], &state);
      row.K = scarborough_lhs_ac(coeffs);
      row.rho = spectral_radius(assemble_iteration_matrix(
          coeffs, cond, ExplicitScheme::ArtificialCompressibility));
    } catch (const std::exception& e) {
      row.flag = std::string("degenerate: ") + e.what();
    }
  });
  for (int i = 0; i < static_cast<int>(out.rows.size()); ++i) {
    const KappaRow& row = out.rows[i];
    if (!row.flag.empty()) continue;
    if (out.argmin_K < 0 || row.K < out.rows[out.argmin_K].K) out.argmin_K = i;
    if (out.argmin_rho < 0 || row.rho < out.rows[out.argmin_rho].rho) {
      out.argmin_rho = i;
    }
  }
  sweep_decisions(config, out.decisions);
  return out;
}

CsvTable MeshSweepResult::csv() const {
  CsvTable out({"I", "J", "N", "K", "rho", "flag"});
  for (const MeshRow& r : rows) {
    out.add_row({static_cast<long long>(r.I), static_cast<long long>(r.J),
                 static_cast<long long>(r.N), r.K, r.rho, r.flag});
  }
  return out;
}

MeshSweepResult sweep_mesh(const ExperimentConfig& config,
                           const MeshPairs& pairs) {
  if (config.scheme == SchemeKind::Implicit) {
    throw InvalidInput("sweep_mesh requires an explicit scheme");
  }
  const ExplicitScheme scheme = config.scheme == SchemeKind::Jacobi
                                    ? ExplicitScheme::Jacobi
                                    : ExplicitScheme::ArtificialCompressibility;
  const InterfaceCondition cond = config.interface_condition();
  MeshSweepResult out;
  out.rows.resize(pairs.size());
  for_each_index(static_cast<int>(pairs.size()), config.concurrent,
                 [&](int i) {
    MeshRow& row = out.rows[i];
    row.I = pairs[i].first;
    row.J = pairs[i].second;
    row.N = row.I + row.J - 4;
    row.K = kNaN;
    row.rho = kNaN;
    try {
      const GridPair grid = make_grid_pair(row.I, row.J, config.dt_over_dx);
      const SolutionField state = analysis_state(config, grid);
      const SchemeCoefficients coeffs =
          compute_coefficients(config.problem, grid, config.kappa, &state);
      row.K = scheme == ExplicitScheme::Jacobi ? scarborough_lhs_explicit(coeffs)
                                               : scarborough_lhs_ac(coeffs);
      row.rho = spectral_radius(assemble_iteration_matrix(coeffs, cond, scheme));
    } catch (const std::exception& e) {
      row.flag = std::string("error: ") + e.what();
    }
  });
  sweep_decisions(config, out.decisions);
  out.decisions["scheme"] = to_string(config.scheme);
  return out;
}

std::vector<double> saddle_axis(double centre, double span, int points) {
  if (points < 1) throw InvalidInput("scan needs at least one point");
  std::vector<double> out(points, centre);
  if (points == 1) return out;
  for (int i = 0; i < points; ++i) {
    const double s = 2.0 * i / (points - 1) - 1.0;
    out[i] = centre + span * s;
  }
  return out;
}

CsvTable SaddleScanResult::csv() const {
  CsvTable out({"alpha", "beta", "rho", "optimum", "flag"});
  for (const SaddleCell& c : cells) {
    out.add_row({c.alpha, c.beta, c.rho,
                 static_cast<long long>(c.optimum ? 1 : 0), c.flag});
  }
  return out;
}

SaddleScanResult scan_saddle(const ExperimentConfig& config,
                             const std::vector<double>& alphas,
                             const std::vector<double>& betas) {
  if (config.scheme != SchemeKind::Implicit) {
    throw InvalidInput("scan_saddle requires scheme=implicit");
  }
  if (alphas.empty() || betas.empty()) {
    throw InvalidInput("scan grids must be nonempty");
  }
  const GridPair grid = config.grid();
  const SolutionField state = analysis_state(config, grid);
  const SchemeCoefficients coeffs =
      compute_coefficients(config.problem, grid, 0.0, &state);
  const RecursionTable table =
      recursion_tables(coeffs, endpoint_calibration().selected);
  SaddleScanResult out;
  out.optimum = optimal_params(table, coeffs);
  out.alpha_points = static_cast<int>(alphas.size());
  out.beta_points = static_cast<int>(betas.size());
  auto nearest = [](const std::vector<double>& axis, double x) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(axis.size()); ++i) {
      if (std::abs(axis[i] - x) < std::abs(axis[best] - x)) best = i;
    }
    return best;
  };
  const int a_opt = nearest(alphas, out.optimum.alpha);
  const int b_opt = nearest(betas, out.optimum.beta);
  for (int a = 0; a < out.alpha_points; ++a) {
    for (int b = 0; b < out.beta_points; ++b) {
      SaddleCell cell;
      cell.alpha = alphas[a];
      cell.beta = betas[b];
      cell.optimum = a == a_opt && b == b_opt;
      try {
        cell.rho = contraction_optimal(table, coeffs, cell.alpha, cell.beta);
      } catch (const std::exception& e) {
        cell.rho = kNaN;
        cell.flag = std::string("degenerate: ") + e.what();
      }
      out.cells.push_back(std::move(cell));
    }
  }
  sweep_decisions(config, out.decisions);
  out.decisions["endpoint_convention"] = to_string(table.convention);
  out.decisions["optimum"] = "alpha=" + format_number(out.optimum.alpha) +
                             " beta=" + format_number(out.optimum.beta);
  return out;
}

RunResult run_experiment(const ExperimentConfig& config) {
  const GridPair grid = config.grid();
  SolverSettings settings = config.solver_settings();
  settings.convention = endpoint_calibration().selected;
  RunResult out;
  out.march = march(config.problem, grid, settings, config.resolved_steps());
  CsvTable table({"step", "time", "outer_iterations", "total_load",
                  "converged", "rho_num", "contraction_theory",
                  "spectral_radius", "alpha", "beta"});
  for (std::size_t n = 0; n < out.march.traces.size(); ++n) {
    const IterationTrace& trace = out.march.traces[n];
    const SolutionField& u_n = out.march.series[n];
    double theory = kNaN;
    double radius = kNaN;
    try {
      const SchemeCoefficients coeffs =
          compute_coefficients(config.problem, grid, config.kappa, &u_n);
      if (config.scheme == SchemeKind::Implicit) {
        const RecursionTable t = recursion_tables(coeffs, settings.convention);
        theory = config.interface == InterfaceKind::Optimal
                     ? contraction_optimal(t, coeffs, trace.alpha, trace.beta)
                     : contraction_classic(t, coeffs);
      } else {
        radius = spectral_radius(assemble_iteration_matrix(
            coeffs, settings.interface,
            config.scheme == SchemeKind::Jacobi
                ? ExplicitScheme::Jacobi
                : ExplicitScheme::ArtificialCompressibility));
      }
    } catch (const std::exception&) {
      // Theory columns stay empty for degenerate states.
    }
    const bool optimal = config.interface == InterfaceKind::Optimal;
    table.add_row({static_cast<long long>(n + 1), u_n.time + grid.dt,
                   static_cast<long long>(trace.outer_count),
                   static_cast<long long>(trace.total_load),
                   static_cast<long long>(trace.converged ? 1 : 0),
                   trace.rho_num, theory, radius,
                   optimal ? trace.alpha : kNaN, optimal ? trace.beta : kNaN});
  }
  out.summary = std::move(table);
  out.decisions["endpoint_convention"] = to_string(settings.convention);
  out.decisions["initial_guess"] = "u^n";
  out.decisions["outer_residual"] = "max-norm change + overlap mismatch";
  if (config.problem.flux == FluxKind::Burgers) {
    out.decisions["burgers_mode"] = to_string(config.burgers_mode);
  }
  if (settings.auto_optimal) {
    out.decisions["optimal_parameters"] = "recomputed from u^n every step";
  }
  return out;
}

}  // namespace schwarz1d::cli
