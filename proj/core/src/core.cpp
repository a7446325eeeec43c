#include "schwarz1d/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace schwarz1d {

SingularSystem::SingularSystem(int row, double pivot)
    : NumericalError("singular tridiagonal system: pivot " +
                     std::to_string(pivot) + " at row " +
                     std::to_string(row)),
      row_(row),
      pivot_(pivot) {}

RecursionBreakdown::RecursionBreakdown(int subdomain, int index)
    : NumericalError("recursion breakdown: R" + std::to_string(subdomain) +
                     "(" + std::to_string(index) + ") is zero"),
      subdomain_(subdomain),
      index_(index) {}

void CoupledProblem::validate() const {
  if (!(b1 >= 0.0) || !(b2 >= 0.0)) {
    throw InvalidInput("diffusion coefficients must be nonnegative");
  }
  for (double v : {a1, b1, c1, a2, b2, c2, left_bc, right_bc}) {
    if (!std::isfinite(v)) throw InvalidInput("problem data must be finite");
  }
}

GridPair make_grid_pair(int I, int J, double dt_over_dx) {
  if (I < 3 || J < 3) {
    throw InvalidInput("grid sizes must satisfy I >= 3 and J >= 3");
  }
  if (!(dt_over_dx > 0.0) || !std::isfinite(dt_over_dx)) {
    throw InvalidInput("dt_over_dx must be positive");
  }
  GridPair grid;
  grid.I = I;
  grid.J = J;
  grid.dx = 2.0 / (I + J - 3);
  grid.dt = dt_over_dx * grid.dx;
  return grid;
}

void assign_eta_field(SubdomainCoefficients& coeffs, const NodeArray& u,
                      const GridPair& grid) {
  const double scale = grid.dt / (2.0 * grid.dx);
  if (coeffs.eta_field.size() != u.size()) {
    coeffs.eta_field = NodeArray(u.size());
  }
  for (int i = 1; i <= u.size(); ++i) coeffs.eta_field(i) = scale * u(i);
}

namespace {

SubdomainCoefficients subdomain_coefficients(double a, double b, double c,
                                             const GridPair& grid, int nodes) {
  SubdomainCoefficients out;
  out.eta = a * grid.dt / (2.0 * grid.dx);
  out.eps = b * grid.dt / (grid.dx * grid.dx);
  out.gamma = c * grid.dt;
  out.eta_field = NodeArray(nodes, out.eta);
  return out;
}

}  // namespace

SchemeCoefficients compute_coefficients(const CoupledProblem& problem,
                                        const GridPair& grid, double kappa,
                                        const SolutionField* u_n) {
  problem.validate();
  if (!(kappa >= 0.0)) throw InvalidInput("kappa must be nonnegative");
  SchemeCoefficients out;
  out.kappa = kappa;
  out.flux = problem.flux;
  const bool burgers = problem.flux == FluxKind::Burgers;
  out.sub1 = subdomain_coefficients(burgers ? 0.0 : problem.a1, problem.b1,
                                    problem.c1, grid, grid.I);
  out.sub2 = subdomain_coefficients(burgers ? 0.0 : problem.a2, problem.b2,
                                    problem.c2, grid, grid.J);
  if (burgers) {
    if (u_n == nullptr) {
      throw InvalidInput("Burgers coefficients need the time-level solution");
    }
    if (u_n->u1.size() != grid.I || u_n->u2.size() != grid.J) {
      throw InvalidInput("solution field does not match the grid");
    }
    assign_eta_field(out.sub1, u_n->u1, grid);
    assign_eta_field(out.sub2, u_n->u2, grid);
  }
  return out;
}

SchemeCoefficients uniform_coefficients(int I, int J, double eta1, double eps1,
                                        double gamma1, double eta2,
                                        double eps2, double gamma2,
                                        double kappa) {
  if (I < 3 || J < 3) {
    throw InvalidInput("grid sizes must satisfy I >= 3 and J >= 3");
  }
  SchemeCoefficients out;
  out.kappa = kappa;
  out.sub1 = {eta1, eps1, gamma1, NodeArray(I, eta1)};
  out.sub2 = {eta2, eps2, gamma2, NodeArray(J, eta2)};
  return out;
}

SolutionField initial_condition(const CoupledProblem& problem,
                                const GridPair& grid) {
  auto profile = [&](double x) {
    if (problem.initial == InitialKind::Sine) {
      return -std::sin(std::numbers::pi * x);
    }
    constexpr double slack = 1e-12;
    return (x >= -0.5 - slack && x <= 0.5 + slack) ? 1.0 : 0.0;
  };
  SolutionField out;
  out.u1 = NodeArray(grid.I);
  out.u2 = NodeArray(grid.J);
  for (int i = 1; i <= grid.I; ++i) out.u1(i) = profile(grid.x1(i));
  for (int j = 1; j <= grid.J; ++j) out.u2(j) = profile(grid.x2(j));
  out.u1(1) = problem.left_bc;
  out.u2(grid.J) = problem.right_bc;
  return out;
}

double max_difference(const SolutionField& a, const SolutionField& b) {
  double out = 0.0;
  for (int k = 1; k <= 2; ++k) {
    const auto& x = a.sub(k).values();
    const auto& y = b.sub(k).values();
    for (std::size_t i = 0; i < x.size(); ++i) {
      out = std::max(out, std::abs(x[i] - y[i]));
    }
  }
  return out;
}

double overlap_mismatch(const SolutionField& u) {
  const int I = u.u1.size();
  return std::max(std::abs(u.u1(I) - u.u2(2)), std::abs(u.u2(1) - u.u1(I - 1)));
}

}  // namespace schwarz1d
