#pragma once

#include <complex>
#include <vector>

#include "schwarz1d/core.hpp"
#include "schwarz1d/interface.hpp"

namespace schwarz1d {

// Row-sum bound of the Jacobi sweep, maximised over interior nodes of both
// subdomains. K < 1 certifies convergence.
double scarborough_lhs_explicit(const SchemeCoefficients& coeffs);

// Same bound for the pseudo-time sweep. Requires kappa > 0.
double scarborough_lhs_ac(const SchemeCoefficients& coeffs);

// Which entry of the subdomain-1 table closes the contraction formulas.
enum class EndpointConvention {
  LastInterior,          // R1(I-1)
  SecondToLastInterior,  // R1(I-2)
};

const char* to_string(EndpointConvention c);

// Continued-fraction tables from eliminating the interior error equations.
// R1 runs forward over i = 2..I-1, R2 backward over j = J-1..2.
struct RecursionTable {
  int I = 0;
  int J = 0;
  std::vector<double> r1;  // r1[i - 2] = R1(i)
  std::vector<double> r2;  // r2[j - 2] = R2(j)
  EndpointConvention convention = EndpointConvention::LastInterior;

  double R1(int i) const { return r1.at(i - 2); }
  double R2(int j) const { return r2.at(j - 2); }
  // R1 entry selected by the convention.
  double r1_endpoint() const;
};

RecursionTable recursion_tables(
    const SchemeCoefficients& coeffs,
    EndpointConvention convention = EndpointConvention::LastInterior);

// Two-outer-iteration contraction of the implicit scheme with classic
// interfaces. Uses eta at node I-1 of subdomain 1 and node 2 of subdomain 2.
double contraction_classic(const RecursionTable& table,
                           const SchemeCoefficients& coeffs);

struct OptimalParams {
  double alpha = 0.0;
  double beta = 0.0;
};

// Parameters that zero both factors of contraction_optimal.
OptimalParams optimal_params(const RecursionTable& table,
                             const SchemeCoefficients& coeffs);

double contraction_optimal(const RecursionTable& table,
                           const SchemeCoefficients& coeffs, double alpha,
                           double beta);

inline constexpr double kNumericalZero = 1e-10;
inline bool is_numerically_zero(double rho) {
  return !(rho > kNumericalZero || rho < -kNumericalZero);
}

// Closed-form eigenvalues of an n x n constant tridiagonal matrix.
// Throws ComplexSpectrum when p_minus * p_plus < 0.
std::vector<double> tridiag_eigenvalues(double p_minus, double p0,
                                        double p_plus, int n);

enum class ExplicitScheme { Jacobi, ArtificialCompressibility };

struct NodeLabel {
  int subdomain = 1;
  int node = 1;
  bool operator==(const NodeLabel&) const = default;
};

// Dense error-propagation matrix, row major. For same-level exchange the
// unknowns are the N = I+J-4 interior nodes. Lagged and relaxation exchanges
// add the two interface nodes u1[I] and u2[1], giving N+2 unknowns.
struct IterationMatrix {
  int n = 0;
  std::vector<double> values;
  std::vector<NodeLabel> labels;

  double operator()(int r, int c) const { return values[r * n + c]; }
  double& operator()(int r, int c) { return values[r * n + c]; }
  // Position of a node in the state vector, or -1 when it is not a state.
  int index_of(int subdomain, int node) const;
};

IterationMatrix assemble_iteration_matrix(const SchemeCoefficients& coeffs,
                                          const InterfaceCondition& cond,
                                          ExplicitScheme scheme);

std::vector<std::complex<double>> eigenvalues(const IterationMatrix& m);

// Largest eigenvalue modulus, via Hessenberg reduction and shifted QR.
double spectral_radius(const IterationMatrix& m);

}  // namespace schwarz1d
