#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schwarz1d/core.hpp"
#include "schwarz1d/driver.hpp"

namespace schwarz1d::cli {

using MeshPairs = std::vector<std::pair<int, int>>;

MeshPairs default_mesh_pairs();

// One experiment, read from flat "key = value" lines. See README for the key
// list. A case id fills the coefficients; explicit coefficient keys override
// them.
struct ExperimentConfig {
  std::string case_id;
  CoupledProblem problem;
  int I = 40;
  int J = 80;
  double dt_over_dx = 1.0;
  SchemeKind scheme = SchemeKind::Implicit;
  InterfaceKind interface = InterfaceKind::ClassicSameLevel;
  double omega1 = 1.0;
  double omega2 = 1.0;
  std::optional<double> alpha;  // absent with the optimal condition: derive
  std::optional<double> beta;   // both from the state at every step
  Strategy strategy;
  BurgersMode burgers_mode = BurgersMode::LaggedIterate;
  int steps = 1;
  std::optional<double> t_end;
  double kappa = 0.0;
  double kappa_min = 1e-3;
  double kappa_max = 1e3;
  int kappa_points = 200;
  bool kappa_log = true;
  double alpha_span = 0.5;
  double beta_span = 0.5;
  int scan_points = 41;
  MeshPairs mesh_pairs = default_mesh_pairs();
  bool concurrent = false;
  std::string output;
  std::uint64_t seed = 0;

  bool operator==(const ExperimentConfig&) const = default;

  GridPair grid() const;
  int resolved_steps() const;
  SolverSettings solver_settings() const;
  InterfaceCondition interface_condition() const;
};

struct ConfigIssue {
  int line = 0;
  std::string message;
};

class ConfigError : public InvalidInput {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

// Throws ConfigError listing every problem found.
ExperimentConfig parse_config(std::string_view text);

// Inverse of parse_config: parse_config(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

const char* to_string(SchemeKind kind);
const char* to_string(InterfaceKind kind);
const char* to_string(StrategyKind kind);
const char* to_string(BurgersMode mode);
const char* to_string(FluxKind flux);
const char* to_string(InitialKind initial);

}  // namespace schwarz1d::cli
