#include <gtest/gtest.h>

#include <cmath>

#include "schwarz1d/cli/cases.hpp"
#include "schwarz1d/cli/config.hpp"
#include "schwarz1d/cli/csv.hpp"
#include "schwarz1d/cli/experiments.hpp"
#include "schwarz1d/cli/reference.hpp"

namespace schwarz1d::cli {
namespace {

TEST(Cases, RegistryContents) {
  for (const char* id : {"1", "2", "3", "3i", "4", "5", "5i", "6", "7"}) {
    EXPECT_NE(find_case(id), nullptr) << id;
  }
  EXPECT_EQ(find_case("8"), nullptr);
  EXPECT_EQ(require_case("4").problem.flux, FluxKind::Burgers);
  EXPECT_EQ(require_case("1").problem.flux, FluxKind::Linear);
}

TEST(Config, ParsesCaseWithOverrides) {
  const ExperimentConfig c = parse_config(
      "# Burgers case 4 with the pseudo-time scheme\n"
      "case=4\nscheme=ac\nkappa=1.350\nI = 10\nJ=20\ndt_over_dx=0.1\n");
  EXPECT_EQ(c.case_id, "4");
  EXPECT_EQ(c.scheme, SchemeKind::ArtificialCompressibility);
  EXPECT_DOUBLE_EQ(c.kappa, 1.35);
  EXPECT_EQ(c.I, 10);
  EXPECT_EQ(c.problem, require_case("4").problem);
}

TEST(Config, RoundTripsLosslessly) {
  ExperimentConfig c = parse_config(
      "a1=0.1\nb1=0.3\nc1=0.7\na2=-0.2\nb2=0.01\nc2=0\nI=12\nJ=17\n"
      "dt_over_dx=0.3333333333333333\nscheme=jacobi\ninterface=relaxation\n"
      "omega1=0.25\nomega2=0.75\nstrategy=fixed\ninner=5\nt_end=0.5\n"
      "mesh=10x10,20x40\nkappa_spacing=linear\nseed=42\nconcurrent=true\n");
  const ExperimentConfig again = parse_config(serialize_config(c));
  EXPECT_EQ(c, again);
  c.interface = InterfaceKind::Optimal;
  c.scheme = SchemeKind::Implicit;
  c.alpha = 0.1 + 0.2;
  c.beta = -1.0 / 3.0;
  EXPECT_EQ(c, parse_config(serialize_config(c)));
}

TEST(Config, ReportsEveryIssue) {
  try {
    parse_config("case=9\nI=two\nbogus=1\nI=3\nscheme=ac\nJ=-4\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const auto& issues = e.issues();
    ASSERT_GE(issues.size(), 5u);
    auto mentions = [&](int line, const std::string& text) {
      for (const auto& i : issues) {
        if ((line < 0 || i.line == line) && i.message.find(text) != std::string::npos) return true;
      }
      return false;
    };
    EXPECT_TRUE(mentions(1, "unknown case"));
    EXPECT_TRUE(mentions(2, "integer"));
    EXPECT_TRUE(mentions(3, "unknown key"));
    EXPECT_TRUE(mentions(4, "duplicate"));
    EXPECT_TRUE(mentions(6, "out of range"));
    EXPECT_TRUE(mentions(-1, "kappa"));
  }
}

TEST(Config, RejectsIncompatibleCombinations) {
  EXPECT_THROW(parse_config("case=1\nscheme=jacobi\ninterface=optimal\n"), ConfigError);
  EXPECT_THROW(parse_config("case=1\ninterface=relaxation\nomega1=0.5\nomega2=0.5\n"),
               ConfigError);
  EXPECT_THROW(parse_config("case=1\nsteps=3\nt_end=0.1\n"), ConfigError);
  EXPECT_THROW(parse_config("case=1\ninterface=optimal\nalpha=0.2\n"), ConfigError);
  EXPECT_THROW(parse_config("case=1\nstrategy=fixed\nscheme=jacobi\n"), ConfigError);
  EXPECT_THROW(parse_config("b1=0.1\n"), ConfigError);
}

TEST(Config, OptimalWithoutParametersIsAutomatic) {
  const ExperimentConfig c = parse_config("case=2\ninterface=optimal\n");
  EXPECT_TRUE(c.solver_settings().auto_optimal);
}

TEST(Csv, NumberFormatting) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1e-14), "1.00000000e-14");
  EXPECT_EQ(format_number(std::nan("")), "nan");
}

TEST(Csv, EscapingAndLineEndings) {
  CsvTable t({"a", "b"});
  t.add_row({std::string("x,y"), 1.5});
  t.add_row({std::string("say \"hi\""), static_cast<long long>(3)});
  EXPECT_EQ(t.str(), "a,b\n\"x,y\",1.5\n\"say \"\"hi\"\"\",3\n");
}

TEST(Reference, DataIsEmbedded) {
  EXPECT_GE(reference_version(), 1);
  EXPECT_DOUBLE_EQ(reference(3, "case1", "rho_theo").value, 0.691235);
  EXPECT_THROW(reference(3, "case9", "rho_theo"), InvalidInput);
}

TEST(Experiments, Table2RowsWithinTolerance) {
  const TableResult t = run_table(2);
  ASSERT_EQ(t.rows.size(), 6u);
  for (const TableRow& r : t.rows) EXPECT_TRUE(r.within_tolerance()) << r.row << r.quantity;
  EXPECT_FALSE(t.decisions.empty());
  EXPECT_THROW(run_table(6), InvalidInput);
}

TEST(Experiments, KappaSweepIsDeterministicUnderConcurrency) {
  ExperimentConfig c = parse_config(
      "case=3\nscheme=ac\nkappa=1\nkappa_points=25\nI=10\nJ=20\n");
  const std::string serial = sweep_kappa(c, kappa_grid(c)).csv().str();
  c.concurrent = true;
  EXPECT_EQ(serial, sweep_kappa(c, kappa_grid(c)).csv().str());
}

TEST(Experiments, KappaGridEndpoints) {
  ExperimentConfig c;
  const auto k = kappa_grid(c);
  ASSERT_EQ(k.size(), 200u);
  EXPECT_DOUBLE_EQ(k.front(), 1e-3);
  EXPECT_NEAR(k.back(), 1e3, 1e-9);
}

TEST(Experiments, MeshSweepRowsInInputOrder) {
  ExperimentConfig c = parse_config("case=1\nscheme=jacobi\nmesh=20x20,10x10,10x20\n");
  c.concurrent = true;
  const MeshSweepResult r = sweep_mesh(c, c.mesh_pairs);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[0].N, 36);
  EXPECT_EQ(r.rows[1].N, 16);
  EXPECT_LT(r.rows[1].rho, r.rows[0].rho);
}

TEST(Experiments, SaddleScanCentredOnOptimum) {
  const ExperimentConfig c = parse_config("case=1\nI=10\nJ=20\nscan_points=5\n");
  const auto axis = saddle_axis(0.3, 0.5, 5);
  EXPECT_DOUBLE_EQ(axis[2], 0.3);
  const SaddleScanResult probe = scan_saddle(c, {0.0}, {0.0});
  const SaddleScanResult r =
      scan_saddle(c, saddle_axis(probe.optimum.alpha, 0.5, 5),
                  saddle_axis(probe.optimum.beta, 0.5, 5));
  EXPECT_TRUE(r.at(2, 2).optimum);
  EXPECT_LT(std::abs(r.at(2, 2).rho), 1e-10);
  EXPECT_GT(std::abs(r.at(0, 0).rho), std::abs(r.at(2, 2).rho));
}

TEST(Experiments, RunProducesOneRowPerStep) {
  const ExperimentConfig c = parse_config("case=1\nI=10\nJ=20\nsteps=3\n");
  const RunResult r = run_experiment(c);
  EXPECT_TRUE(r.march.completed);
  const std::string csv = r.summary.str();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_EQ(csv.rfind("step,time,outer_iterations", 0), 0u);
}

}  // namespace
}  // namespace schwarz1d::cli
