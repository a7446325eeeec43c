#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "schwarz1d/cli/config.hpp"
#include "schwarz1d/cli/csv.hpp"
#include "schwarz1d/cli/experiments.hpp"
#include "schwarz1d/errors.hpp"
#include "schwarz1d/validation/acceptance.hpp"

namespace {

namespace s1 = schwarz1d;
namespace cli = schwarz1d::cli;

enum ExitCode { kOk = 0, kUsage = 1, kNumerical = 2, kDeviation = 3 };

struct Options {
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
  bool verbose = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw s1::InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw s1::InvalidInput("cannot write " + path);
  out << text;
}

std::string output_path(const Options& opts, const cli::ExperimentConfig* config) {
  if (!opts.out.empty()) return opts.out;
  return config != nullptr ? config->output : std::string();
}

// CSV goes to the output path, or stdout; a manifest is written next to a
// file output.
void emit(const std::string& path, const std::string& csv,
          const std::string& config_text, const cli::Decisions& decisions) {
  if (path.empty()) {
    std::cout << csv;
    return;
  }
  write_file(path, csv);
  write_file(path + ".manifest", cli::format_manifest(config_text, decisions));
}

struct LoadedConfig {
  cli::ExperimentConfig config;
  std::string text;
};

LoadedConfig load(const std::string& path, const Options& opts) {
  LoadedConfig out;
  out.text = read_file(path);
  out.config = cli::parse_config(out.text);
  if (opts.seed) out.config.seed = *opts.seed;
  return out;
}

cli::Decisions with_common(cli::Decisions d, const cli::ExperimentConfig& c) {
  d["seed"] = std::to_string(c.seed);
  d["endpoint_convention"] =
      s1::to_string(cli::endpoint_calibration().selected);
  return d;
}

int run_cmd(const std::string& path, const Options& opts) {
  const LoadedConfig lc = load(path, opts);
  const cli::RunResult r = cli::run_experiment(lc.config);
  emit(output_path(opts, &lc.config), r.summary.str(), lc.text,
       with_common(r.decisions, lc.config));
  if (!r.march.completed) {
    std::cerr << "run stopped early: " << r.march.failure << '\n';
    return kNumerical;
  }
  return kOk;
}

int table_cmd(int id, const Options& opts) {
  const cli::TableResult r = cli::run_table(id);
  cli::Decisions d = r.decisions;
  d["table"] = std::to_string(id);
  emit(opts.out, r.csv().str(), "table=" + std::to_string(id) + "\n", d);
  int deviations = 0;
  for (const cli::TableRow& row : r.rows) {
    if (!row.within_tolerance()) ++deviations;
  }
  if (deviations > 0) {
    std::cerr << deviations << " of " << r.rows.size()
              << " rows outside tolerance\n";
    return kDeviation;
  }
  return kOk;
}

int sweep_kappa_cmd(const std::string& path, const Options& opts) {
  const LoadedConfig lc = load(path, opts);
  const cli::KappaSweepResult r =
      cli::sweep_kappa(lc.config, cli::kappa_grid(lc.config));
  emit(output_path(opts, &lc.config), r.csv().str(), lc.text,
       with_common(r.decisions, lc.config));
  return kOk;
}

int sweep_mesh_cmd(const std::string& path, const Options& opts) {
  const LoadedConfig lc = load(path, opts);
  const cli::MeshSweepResult r = cli::sweep_mesh(lc.config, lc.config.mesh_pairs);
  emit(output_path(opts, &lc.config), r.csv().str(), lc.text,
       with_common(r.decisions, lc.config));
  return kOk;
}

int scan_saddle_cmd(const std::string& path, const Options& opts) {
  const LoadedConfig lc = load(path, opts);
  const s1::GridPair grid = lc.config.grid();
  const s1::SolutionField state =
      lc.config.problem.flux == s1::FluxKind::Burgers
          ? cli::state_at_step(lc.config.problem, grid,
                               lc.config.resolved_steps(),
                               lc.config.burgers_mode)
          : s1::initial_condition(lc.config.problem, grid);
  const s1::OptimalParams centre = s1::predicted_optimal(
      state, lc.config.problem, grid, cli::endpoint_calibration().selected);
  const cli::SaddleScanResult r = cli::scan_saddle(
      lc.config,
      cli::saddle_axis(centre.alpha, lc.config.alpha_span, lc.config.scan_points),
      cli::saddle_axis(centre.beta, lc.config.beta_span, lc.config.scan_points));
  emit(output_path(opts, &lc.config), r.csv().str(), lc.text,
       with_common(r.decisions, lc.config));
  return kOk;
}

int check_cmd(const Options& opts) {
  const std::uint64_t seed = opts.seed.value_or(20240611);
  std::string report;
  bool all = true;
  for (const auto& r : schwarz1d::validation::run_acceptance(seed)) {
    report += schwarz1d::validation::format_criterion(r, opts.verbose);
    all = all && r.passed;
  }
  std::cout << report;
  if (!opts.out.empty()) write_file(opts.out, report);
  return all ? kOk : kDeviation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overlapping Schwarz solver and convergence analysis for 1D "
               "advection-diffusion-reaction and viscous Burgers problems"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  std::uint64_t seed = 0;
  app.add_option("--out", opts.out, "Write CSV here; a .manifest file is written beside it");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv"}));

  std::string config_path;
  int table_id = 0;
  auto* run = app.add_subcommand("run", "March an experiment from a config file");
  run->add_option("config", config_path)->required()->check(CLI::ExistingFile);
  auto* table = app.add_subcommand("table", "Reproduce one published table");
  table->add_option("id", table_id)->required();
  auto* kappa = app.add_subcommand("sweep-kappa", "Scarborough value and spectral radius over a kappa grid");
  kappa->add_option("config", config_path)->required()->check(CLI::ExistingFile);
  auto* mesh = app.add_subcommand("sweep-mesh", "Spectral radius over (I,J) pairs");
  mesh->add_option("config", config_path)->required()->check(CLI::ExistingFile);
  auto* saddle = app.add_subcommand("scan-saddle", "Contraction factor around the optimal (alpha, beta)");
  saddle->add_option("config", config_path)->required()->check(CLI::ExistingFile);
  auto* check = app.add_subcommand("check", "Run the acceptance suite");
  check->add_flag("--verbose", opts.verbose, "List passing sub-checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (seed_opt->count() > 0) opts.seed = seed;

  try {
    if (*run) return run_cmd(config_path, opts);
    if (*table) return table_cmd(table_id, opts);
    if (*kappa) return sweep_kappa_cmd(config_path, opts);
    if (*mesh) return sweep_mesh_cmd(config_path, opts);
    if (*saddle) return scan_saddle_cmd(config_path, opts);
    if (*check) return check_cmd(opts);
  } catch (const cli::ConfigError& e) {
    for (const auto& issue : e.issues()) {
      std::cerr << config_path << ":" << issue.line << ": " << issue.message << '\n';
    }
    return kUsage;
  } catch (const s1::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const s1::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
