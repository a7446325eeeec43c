#include "schwarz1d/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "schwarz1d/cli/cases.hpp"

namespace schwarz1d::cli {

MeshPairs default_mesh_pairs() {
  return {{10, 10}, {10, 20}, {20, 20},  {20, 40},  {40, 40},
          {40, 80}, {80, 80}, {80, 160}, {160, 160}};
}

GridPair ExperimentConfig::grid() const {
  return make_grid_pair(I, J, dt_over_dx);
}

int ExperimentConfig::resolved_steps() const {
  return t_end ? steps_for(*t_end, grid()) : steps;
}

InterfaceCondition ExperimentConfig::interface_condition() const {
  switch (interface) {
    case InterfaceKind::ClassicSameLevel:
      return InterfaceCondition::classic_same_level();
    case InterfaceKind::ClassicLagged:
      return InterfaceCondition::classic_lagged();
    case InterfaceKind::Relaxation:
      return InterfaceCondition::relaxation(omega1, omega2);
    case InterfaceKind::Optimal:
      return InterfaceCondition::optimal(alpha.value_or(0.0),
                                         beta.value_or(0.0));
  }
  return {};
}

SolverSettings ExperimentConfig::solver_settings() const {
  SolverSettings s;
  s.scheme = scheme;
  s.interface = interface_condition();
  s.auto_optimal = interface == InterfaceKind::Optimal && !alpha;
  s.strategy = strategy;
  s.kappa = kappa;
  s.burgers_mode = burgers_mode;
  s.concurrent = concurrent;
  return s;
}

namespace {

std::string join_issues(const std::vector<ConfigIssue>& issues) {
  std::string out = "invalid configuration:";
  for (const ConfigIssue& issue : issues) {
    out += "\n  line " + std::to_string(issue.line) + ": " + issue.message;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  int line = 0;
};

class Reader {
 public:
  explicit Reader(std::vector<ConfigIssue>& issues) : issues_(issues) {}

  void issue(int line, std::string message) {
    issues_.push_back({line, std::move(message)});
  }

  std::optional<double> real(const std::string& key, const Entry& e) {
    double v = 0.0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
      issue(e.line, key + ": expected a real number, got '" + e.value + "'");
      return std::nullopt;
    }
    return v;
  }

  std::optional<long long> integer(const std::string& key, const Entry& e) {
    long long v = 0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      issue(e.line, key + ": expected an integer, got '" + e.value + "'");
      return std::nullopt;
    }
    return v;
  }

  template <typename T>
  std::optional<T> choice(const std::string& key, const Entry& e,
                          const std::vector<std::pair<std::string, T>>& opts) {
    for (const auto& [name, value] : opts) {
      if (e.value == name) return value;
    }
    std::string names;
    for (const auto& [name, value] : opts) {
      names += names.empty() ? name : ", " + name;
    }
    issue(e.line, key + ": expected one of " + names + ", got '" + e.value +
                      "'");
    return std::nullopt;
  }

 private:
  std::vector<ConfigIssue>& issues_;
};

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "case",        "a1",          "b1",         "c1",
      "a2",          "b2",          "c2",         "flux",
      "ic",          "left_bc",     "right_bc",   "I",
      "J",           "dt_over_dx",  "scheme",     "interface",
      "omega1",      "omega2",      "alpha",      "beta",
      "strategy",    "inner",       "outer_tol",  "inner_tol",
      "max_outer",   "max_inner",   "burgers_mode", "steps",
      "t_end",       "kappa",       "kappa_min",  "kappa_max",
      "kappa_points", "kappa_spacing", "alpha_span", "beta_span",
      "scan_points", "mesh",        "concurrent", "output",
      "seed"};
  return keys;
}

bool is_known(const std::string& key) {
  for (const std::string& k : known_keys()) {
    if (k == key) return true;
  }
  return false;
}

const std::vector<std::pair<std::string, SchemeKind>> kSchemes = {
    {"jacobi", SchemeKind::Jacobi},
    {"ac", SchemeKind::ArtificialCompressibility},
    {"implicit", SchemeKind::Implicit}};
const std::vector<std::pair<std::string, InterfaceKind>> kInterfaces = {
    {"same-level", InterfaceKind::ClassicSameLevel},
    {"classic", InterfaceKind::ClassicSameLevel},
    {"lagged", InterfaceKind::ClassicLagged},
    {"relaxation", InterfaceKind::Relaxation},
    {"optimal", InterfaceKind::Optimal}};
const std::vector<std::pair<std::string, StrategyKind>> kStrategies = {
    {"one-to-one", StrategyKind::OneToOne},
    {"fixed", StrategyKind::FixedInner},
    {"converge", StrategyKind::InnerToConvergence}};
const std::vector<std::pair<std::string, BurgersMode>> kModes = {
    {"lagged", BurgersMode::LaggedIterate},
    {"linearized", BurgersMode::TimeLevel}};
const std::vector<std::pair<std::string, FluxKind>> kFluxes = {
    {"linear", FluxKind::Linear}, {"burgers", FluxKind::Burgers}};
const std::vector<std::pair<std::string, InitialKind>> kInitials = {
    {"sine", InitialKind::Sine}, {"step", InitialKind::Step}};
const std::vector<std::pair<std::string, bool>> kBools = {{"true", true},
                                                          {"false", false}};
const std::vector<std::pair<std::string, bool>> kSpacings = {
    {"log", true}, {"linear", false}};

template <typename T>
const char* name_of(const std::vector<std::pair<std::string, T>>& opts,
                    T value) {
  for (const auto& [name, v] : opts) {
    if (v == value) return name.c_str();
  }
  return "?";
}

std::optional<MeshPairs> parse_mesh(const std::string& text) {
  MeshPairs out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const std::string_view token = trim(item);
    const auto x = token.find('x');
    if (x == std::string_view::npos) return std::nullopt;
    int i = 0;
    int j = 0;
    const std::string_view left = token.substr(0, x);
    const std::string_view right = token.substr(x + 1);
    auto r1 = std::from_chars(left.data(), left.data() + left.size(), i);
    auto r2 = std::from_chars(right.data(), right.data() + right.size(), j);
    if (r1.ec != std::errc() || r1.ptr != left.data() + left.size() ||
        r2.ec != std::errc() || r2.ptr != right.data() + right.size()) {
      return std::nullopt;
    }
    out.emplace_back(i, j);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : InvalidInput(join_issues(issues)), issues_(std::move(issues)) {}

const char* to_string(SchemeKind kind) { return name_of(kSchemes, kind); }
const char* to_string(InterfaceKind kind) {
  return name_of(kInterfaces, kind);
}
const char* to_string(StrategyKind kind) { return name_of(kStrategies, kind); }
const char* to_string(BurgersMode mode) { return name_of(kModes, mode); }
const char* to_string(FluxKind flux) { return name_of(kFluxes, flux); }
const char* to_string(InitialKind initial) {
  return name_of(kInitials, initial);
}

ExperimentConfig parse_config(std::string_view text) {
  std::vector<ConfigIssue> issues;
  Reader reader(issues);
  std::map<std::string, Entry> entries;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      reader.issue(line_no, "expected key=value, got '" + std::string(line) +
                                "'");
      continue;
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!is_known(key)) {
      reader.issue(line_no, "unknown key '" + key + "'");
      continue;
    }
    if (entries.count(key) != 0) {
      reader.issue(line_no, "duplicate key '" + key + "' (first on line " +
                                std::to_string(entries[key].line) + ")");
      continue;
    }
    entries[key] = {value, line_no};
  }
  const int end_line = line_no;

  ExperimentConfig config;
  auto has = [&](const std::string& key) { return entries.count(key) != 0; };

  if (has("case")) {
    const Entry& e = entries["case"];
    if (const CaseDefinition* c = find_case(e.value)) {
      config.case_id = c->id;
      config.problem = c->problem;
    } else {
      reader.issue(e.line, "unknown case id '" + e.value + "'");
    }
  }

  auto real_key = [&](const std::string& key, double& target,
                      const std::function<bool(double)>& ok,
                      const char* range) {
    if (!has(key)) return;
    const Entry& e = entries[key];
    if (auto v = reader.real(key, e)) {
      if (ok && !ok(*v)) {
        reader.issue(e.line, key + ": value " + e.value + " out of range (" +
                                 range + ")");
      } else {
        target = *v;
      }
    }
  };
  auto int_key = [&](const std::string& key, int& target, long long lo,
                     long long hi) {
    if (!has(key)) return;
    const Entry& e = entries[key];
    if (auto v = reader.integer(key, e)) {
      if (*v < lo || *v > hi) {
        reader.issue(e.line, key + ": value " + e.value + " out of range [" +
                                 std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
      } else {
        target = static_cast<int>(*v);
      }
    }
  };
  auto nonneg = [](double v) { return v >= 0.0; };
  auto positive = [](double v) { return v > 0.0; };

  if (has("flux")) {
    if (auto v = reader.choice("flux", entries["flux"], kFluxes)) {
      config.problem.flux = *v;
    }
  }
  if (has("ic")) {
    if (auto v = reader.choice("ic", entries["ic"], kInitials)) {
      config.problem.initial = *v;
    }
  }
  real_key("a1", config.problem.a1, nullptr, "");
  real_key("b1", config.problem.b1, nonneg, ">= 0");
  real_key("c1", config.problem.c1, nullptr, "");
  real_key("a2", config.problem.a2, nullptr, "");
  real_key("b2", config.problem.b2, nonneg, ">= 0");
  real_key("c2", config.problem.c2, nullptr, "");
  real_key("left_bc", config.problem.left_bc, nullptr, "");
  real_key("right_bc", config.problem.right_bc, nullptr, "");

  if (!has("case")) {
    std::vector<std::string> required = {"b1", "c1", "b2", "c2"};
    if (config.problem.flux == FluxKind::Linear) {
      required.insert(required.begin(), {"a1", "a2"});
    }
    for (const std::string& key : required) {
      if (!has(key)) {
        reader.issue(end_line, "missing required key '" + key +
                                   "' (or give 'case')");
      }
    }
  }

  int_key("I", config.I, 3, 100000);
  int_key("J", config.J, 3, 100000);
  real_key("dt_over_dx", config.dt_over_dx, positive, "> 0");

  if (has("scheme")) {
    if (auto v = reader.choice("scheme", entries["scheme"], kSchemes)) {
      config.scheme = *v;
    }
  }
  if (has("interface")) {
    if (auto v =
            reader.choice("interface", entries["interface"], kInterfaces)) {
      config.interface = *v;
    }
  }
  real_key("omega1", config.omega1, nullptr, "");
  real_key("omega2", config.omega2, nullptr, "");
  if (has("alpha")) {
    double v = 0.0;
    real_key("alpha", v, nullptr, "");
    config.alpha = v;
  }
  if (has("beta")) {
    double v = 0.0;
    real_key("beta", v, nullptr, "");
    config.beta = v;
  }

  if (has("strategy")) {
    if (auto v = reader.choice("strategy", entries["strategy"], kStrategies)) {
      config.strategy.kind = *v;
    }
  }
  int_key("inner", config.strategy.inner_count, 1, 100000000);
  real_key("outer_tol", config.strategy.outer_tolerance, positive, "> 0");
  real_key("inner_tol", config.strategy.inner_tolerance, positive, "> 0");
  int_key("max_outer", config.strategy.max_outer, 1, 100000000);
  int_key("max_inner", config.strategy.max_inner, 1, 100000000);
  if (has("burgers_mode")) {
    if (auto v =
            reader.choice("burgers_mode", entries["burgers_mode"], kModes)) {
      config.burgers_mode = *v;
    }
  }
  int_key("steps", config.steps, 0, 100000000);
  if (has("t_end")) {
    double v = 0.0;
    real_key("t_end", v, nonneg, ">= 0");
    config.t_end = v;
  }
  real_key("kappa", config.kappa, positive, "> 0");
  real_key("kappa_min", config.kappa_min, positive, "> 0");
  real_key("kappa_max", config.kappa_max, positive, "> 0");
  int_key("kappa_points", config.kappa_points, 1, 1000000);
  if (has("kappa_spacing")) {
    if (auto v = reader.choice("kappa_spacing", entries["kappa_spacing"],
                               kSpacings)) {
      config.kappa_log = *v;
    }
  }
  real_key("alpha_span", config.alpha_span, positive, "> 0");
  real_key("beta_span", config.beta_span, positive, "> 0");
  int_key("scan_points", config.scan_points, 1, 100000);
  if (has("mesh")) {
    const Entry& e = entries["mesh"];
    auto pairs = parse_mesh(e.value);
    if (!pairs) {
      reader.issue(e.line, "mesh: expected IxJ[,IxJ...], got '" + e.value +
                               "'");
    } else {
      bool ok = true;
      for (const auto& [i, j] : *pairs) ok = ok && i >= 3 && j >= 3;
      if (!ok) {
        reader.issue(e.line, "mesh: every pair needs I >= 3 and J >= 3");
      } else {
        config.mesh_pairs = *pairs;
      }
    }
  }
  if (has("concurrent")) {
    if (auto v = reader.choice("concurrent", entries["concurrent"], kBools)) {
      config.concurrent = *v;
    }
  }
  if (has("output")) config.output = entries["output"].value;
  if (has("seed")) {
    const Entry& e = entries["seed"];
    if (auto v = reader.integer("seed", e)) {
      if (*v < 0) {
        reader.issue(e.line, "seed: value must be nonnegative");
      } else {
        config.seed = static_cast<std::uint64_t>(*v);
      }
    }
  }

  // Combinations.
  auto line_of = [&](const std::string& key) {
    return has(key) ? entries[key].line : end_line;
  };
  if (has("steps") && has("t_end")) {
    reader.issue(line_of("t_end"), "give either 'steps' or 't_end', not both");
  }
  if (config.interface == InterfaceKind::Optimal &&
      config.scheme != SchemeKind::Implicit) {
    reader.issue(line_of("interface"),
                 "interface=optimal requires scheme=implicit");
  }
  if (config.interface == InterfaceKind::Relaxation) {
    if (config.scheme == SchemeKind::Implicit) {
      reader.issue(line_of("interface"),
                   "interface=relaxation requires an explicit scheme");
    }
    for (const char* key : {"omega1", "omega2"}) {
      if (!has(key)) {
        reader.issue(end_line, std::string("missing required key '") + key +
                                   "' for interface=relaxation");
      }
    }
  }
  if (config.alpha.has_value() != config.beta.has_value()) {
    reader.issue(line_of(config.alpha ? "alpha" : "beta"),
                 "alpha and beta must be given together");
  }
  if (config.scheme == SchemeKind::ArtificialCompressibility &&
      !has("kappa") && !has("kappa_min")) {
    reader.issue(end_line, "missing required key 'kappa' for scheme=ac");
  }
  if (config.kappa_min > config.kappa_max) {
    reader.issue(line_of("kappa_max"), "kappa range is empty");
  }
  if (config.strategy.kind == StrategyKind::FixedInner && !has("inner")) {
    reader.issue(end_line, "missing required key 'inner' for strategy=fixed");
  }

  if (!issues.empty()) throw ConfigError(std::move(issues));
  return config;
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  auto put = [&](const char* key, const std::string& value) {
    out << key << "=" << value << "\n";
  };
  if (!c.case_id.empty()) put("case", c.case_id);
  put("flux", to_string(c.problem.flux));
  put("ic", to_string(c.problem.initial));
  put("a1", format_real(c.problem.a1));
  put("b1", format_real(c.problem.b1));
  put("c1", format_real(c.problem.c1));
  put("a2", format_real(c.problem.a2));
  put("b2", format_real(c.problem.b2));
  put("c2", format_real(c.problem.c2));
  put("left_bc", format_real(c.problem.left_bc));
  put("right_bc", format_real(c.problem.right_bc));
  put("I", std::to_string(c.I));
  put("J", std::to_string(c.J));
  put("dt_over_dx", format_real(c.dt_over_dx));
  put("scheme", to_string(c.scheme));
  put("interface", to_string(c.interface));
  put("omega1", format_real(c.omega1));
  put("omega2", format_real(c.omega2));
  if (c.alpha) put("alpha", format_real(*c.alpha));
  if (c.beta) put("beta", format_real(*c.beta));
  put("strategy", to_string(c.strategy.kind));
  put("inner", std::to_string(c.strategy.inner_count));
  put("outer_tol", format_real(c.strategy.outer_tolerance));
  put("inner_tol", format_real(c.strategy.inner_tolerance));
  put("max_outer", std::to_string(c.strategy.max_outer));
  put("max_inner", std::to_string(c.strategy.max_inner));
  put("burgers_mode", to_string(c.burgers_mode));
  if (c.t_end) {
    put("t_end", format_real(*c.t_end));
  } else {
    put("steps", std::to_string(c.steps));
  }
  if (c.kappa > 0.0) put("kappa", format_real(c.kappa));
  put("kappa_min", format_real(c.kappa_min));
  put("kappa_max", format_real(c.kappa_max));
  put("kappa_points", std::to_string(c.kappa_points));
  put("kappa_spacing", c.kappa_log ? "log" : "linear");
  put("alpha_span", format_real(c.alpha_span));
  put("beta_span", format_real(c.beta_span));
  put("scan_points", std::to_string(c.scan_points));
  std::string mesh;
  for (const auto& [i, j] : c.mesh_pairs) {
    if (!mesh.empty()) mesh += ",";
    mesh += std::to_string(i) + "x" + std::to_string(j);
  }
  put("mesh", mesh);
  put("concurrent", c.concurrent ? "true" : "false");
  if (!c.output.empty()) put("output", c.output);
  put("seed", std::to_string(c.seed));
  return out.str();
}

}  // namespace schwarz1d::cli
