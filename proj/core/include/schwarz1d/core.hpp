#pragma once

#include <cassert>
#include <vector>

#include "schwarz1d/errors.hpp"

namespace schwarz1d {

enum class FluxKind { Linear, Burgers };
enum class InitialKind { Sine, Step };

// Two coupled equations u_t + a u_x = b u_xx - c u on [-1, 1], one per
// subdomain. For Burgers flux the advection speed is the solution itself and
// a1, a2 are ignored.
struct CoupledProblem {
  double a1 = 0.0, b1 = 0.0, c1 = 0.0;
  double a2 = 0.0, b2 = 0.0, c2 = 0.0;
  FluxKind flux = FluxKind::Linear;
  InitialKind initial = InitialKind::Sine;
  double left_bc = 0.0;
  double right_bc = 0.0;

  void validate() const;
  bool operator==(const CoupledProblem&) const = default;
};

// Nodal values addressed with 1-based indices.
class NodeArray {
 public:
  NodeArray() = default;
  explicit NodeArray(int n, double value = 0.0) : values_(n, value) {}

  double& operator()(int i) {
    assert(i >= 1 && i <= size());
    return values_[i - 1];
  }
  double operator()(int i) const {
    assert(i >= 1 && i <= size());
    return values_[i - 1];
  }
  int size() const { return static_cast<int>(values_.size()); }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const NodeArray&) const = default;

 private:
  std::vector<double> values_;
};

// Overlapping uniform grids. Grid 1 has nodes 1..I starting at x=-1, grid 2
// has nodes 1..J ending at x=+1. Grid 1 node I-1 coincides with grid 2 node
// 1 and grid 1 node I with grid 2 node 2.
struct GridPair {
  int I = 0;
  int J = 0;
  double dx = 0.0;
  double dt = 0.0;

  static constexpr double x_left = -1.0;
  static constexpr double x_right = 1.0;

  double x1(int i) const { return x_left + (i - 1) * dx; }
  double x2(int j) const { return x_left + (I - 3 + j) * dx; }
  int interior_count() const { return I + J - 4; }
  int distinct_nodes() const { return I + J - 2; }
  int node_count(int k) const { return k == 1 ? I : J; }
};

GridPair make_grid_pair(int I, int J, double dt_over_dx);

struct SubdomainCoefficients {
  double eta = 0.0;    // a dt / (2 dx); unused for Burgers flux
  double eps = 0.0;    // b dt / dx^2
  double gamma = 0.0;  // c dt
  NodeArray eta_field;  // per-node eta, constant for linear flux

  double diagonal() const { return 1.0 + 2.0 * eps + gamma; }
};

struct SchemeCoefficients {
  SubdomainCoefficients sub1;
  SubdomainCoefficients sub2;
  double kappa = 0.0;  // dt / dtau, 0 when no pseudo-time term is used
  FluxKind flux = FluxKind::Linear;

  const SubdomainCoefficients& sub(int k) const { return k == 1 ? sub1 : sub2; }
  SubdomainCoefficients& sub(int k) { return k == 1 ? sub1 : sub2; }
  int I() const { return sub1.eta_field.size(); }
  int J() const { return sub2.eta_field.size(); }
};

struct SolutionField {
  NodeArray u1;
  NodeArray u2;
  double time = 0.0;

  const NodeArray& sub(int k) const { return k == 1 ? u1 : u2; }
  NodeArray& sub(int k) { return k == 1 ? u1 : u2; }
};

// u_n is required for Burgers flux, where it fills the eta fields.
SchemeCoefficients compute_coefficients(const CoupledProblem& problem,
                                        const GridPair& grid, double kappa,
                                        const SolutionField* u_n = nullptr);

// Coefficients with constant eta fields, for analysis without a grid.
SchemeCoefficients uniform_coefficients(int I, int J, double eta1, double eps1,
                                        double gamma1, double eta2,
                                        double eps2, double gamma2,
                                        double kappa = 0.0);

// Refills the eta field of one subdomain from nodal values (Burgers flux).
void assign_eta_field(SubdomainCoefficients& coeffs, const NodeArray& u,
                      const GridPair& grid);

SolutionField initial_condition(const CoupledProblem& problem,
                                const GridPair& grid);

// Largest |a - b| over both subdomains.
double max_difference(const SolutionField& a, const SolutionField& b);

// Overlap incoherence max(|u1[I] - u2[2]|, |u2[1] - u1[I-1]|).
double overlap_mismatch(const SolutionField& u);

}  // namespace schwarz1d
