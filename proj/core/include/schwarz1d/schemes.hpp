#pragma once

#include <vector>

#include "schwarz1d/core.hpp"

namespace schwarz1d {

// Row r (0-based) reads lower[r] x[r-1] + diag[r] x[r] + upper[r] x[r+1] = rhs[r].
// lower[0] and upper[n-1] are ignored.
struct TridiagonalSystem {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;
  std::vector<double> rhs;

  TridiagonalSystem() = default;
  explicit TridiagonalSystem(int n)
      : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0) {}
  int size() const { return static_cast<int>(diag.size()); }
};

inline constexpr double kPivotFloor = 1e-300;

// Thomas algorithm without pivoting. Throws SingularSystem when a pivot drops
// below kPivotFloor in magnitude.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

// True when every row satisfies |diag| >= |lower| + |upper|.
bool diagonally_dominant(const TridiagonalSystem& sys);

// One Jacobi sweep over the interior nodes of subdomain k. Interface and
// boundary entries are copied from u_prev unchanged.
NodeArray jacobi_sweep(const SchemeCoefficients& coeffs,
                       const SolutionField& u_prev, const SolutionField& u_n,
                       int k);

// One pseudo-time sweep with the kappa term. Requires kappa > 0.
NodeArray ac_sweep(const SchemeCoefficients& coeffs,
                   const SolutionField& u_prev, const SolutionField& u_n,
                   int k);

// Interface equation closing a subdomain system.
//   subdomain 1, node I: neighbor * u[I-1] + self * u[I] = rhs
//   subdomain 2, node 1: self * u[1] + neighbor * u[2] = rhs
struct InterfaceRow {
  double neighbor = 0.0;
  double self = 1.0;
  double rhs = 0.0;
};

inline InterfaceRow dirichlet_row(double value) { return {0.0, 1.0, value}; }

// Assembles and solves the implicit system of subdomain k. Boundary values
// come from u_n. The eta field of coeffs is used as given.
NodeArray implicit_subdomain_step(const SchemeCoefficients& coeffs,
                                  const InterfaceRow& interface_row,
                                  const SolutionField& u_n, int k);

// The tridiagonal system solved by implicit_subdomain_step.
TridiagonalSystem assemble_subdomain_system(const SchemeCoefficients& coeffs,
                                            const InterfaceRow& interface_row,
                                            const SolutionField& u_n, int k);

}  // namespace schwarz1d
