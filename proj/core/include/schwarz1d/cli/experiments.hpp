#pragma once

#include <map>
#include <string>
#include <vector>

#include "schwarz1d/analysis.hpp"
#include "schwarz1d/cli/config.hpp"
#include "schwarz1d/cli/csv.hpp"
#include "schwarz1d/driver.hpp"

namespace schwarz1d::cli {

using Decisions = std::map<std::string, std::string>;

// One compared quantity of a reproduced table.
struct TableRow {
  int table = 0;
  std::string row;
  std::string quantity;
  double reference = 0.0;
  double tolerance = 0.0;
  bool relative = false;
  double computed = 0.0;
  bool failed = false;  // computation raised an error
  std::string error;
  std::string note;

  double abs_deviation() const;
  double rel_deviation() const;
  bool within_tolerance() const;
  std::string status() const;
};

struct TableResult {
  int table = 0;
  std::vector<TableRow> rows;
  Decisions decisions;

  const TableRow& find(const std::string& row,
                       const std::string& quantity) const;
  CsvTable csv() const;
};

const std::vector<int>& supported_tables();

// Reproduces one published table. Failures are recorded per row.
TableResult run_table(int id);

// Endpoint convention picked by calibrating against measured ratios of the
// linear cases 1-3; computed once.
const ConventionCalibration& endpoint_calibration();

// Solution at the given step, from converged monolithic solves.
SolutionField state_at_step(const CoupledProblem& problem,
                            const GridPair& grid, int step, BurgersMode mode);

struct KappaRow {
  double kappa = 0.0;
  double K = 0.0;
  double rho = 0.0;
  std::string flag;
};

struct KappaSweepResult {
  std::vector<KappaRow> rows;
  int argmin_K = -1;
  int argmin_rho = -1;
  Decisions decisions;

  CsvTable csv() const;
};

std::vector<double> kappa_grid(const ExperimentConfig& config);

KappaSweepResult sweep_kappa(const ExperimentConfig& config,
                             const std::vector<double>& kappas);

struct MeshRow {
  int I = 0;
  int J = 0;
  int N = 0;
  double K = 0.0;
  double rho = 0.0;
  std::string flag;
};

struct MeshSweepResult {
  std::vector<MeshRow> rows;
  Decisions decisions;

  CsvTable csv() const;
};

MeshSweepResult sweep_mesh(const ExperimentConfig& config,
                           const MeshPairs& pairs);

struct SaddleCell {
  double alpha = 0.0;
  double beta = 0.0;
  double rho = 0.0;
  std::string flag;
  bool optimum = false;
};

struct SaddleScanResult {
  OptimalParams optimum;
  std::vector<SaddleCell> cells;  // alpha-major
  int alpha_points = 0;
  int beta_points = 0;
  Decisions decisions;

  const SaddleCell& at(int a, int b) const {
    return cells[static_cast<std::size_t>(a) * beta_points + b];
  }
  CsvTable csv() const;
};

// Grids centred on the analytic optimum, spans from the config.
std::vector<double> saddle_axis(double centre, double span, int points);

SaddleScanResult scan_saddle(const ExperimentConfig& config,
                             const std::vector<double>& alphas,
                             const std::vector<double>& betas);

struct RunResult {
  MarchResult march;
  CsvTable summary{{}};
  Decisions decisions;
};

RunResult run_experiment(const ExperimentConfig& config);

}  // namespace schwarz1d::cli
