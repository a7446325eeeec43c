#include "schwarz1d/schemes.hpp"

#include <cmath>

namespace schwarz1d {

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
  const int n = sys.size();
  if (n < 1) throw InvalidInput("tridiagonal system must have n >= 1");
  if (static_cast<int>(sys.lower.size()) != n ||
      static_cast<int>(sys.upper.size()) != n ||
      static_cast<int>(sys.rhs.size()) != n) {
    throw InvalidInput("tridiagonal system arrays differ in length");
  }
  std::vector<double> c(n, 0.0);
  std::vector<double> x(n, 0.0);
  double pivot = sys.diag[0];
  if (std::abs(pivot) < kPivotFloor) throw SingularSystem(1, pivot);
  c[0] = n > 1 ? sys.upper[0] / pivot : 0.0;
  x[0] = sys.rhs[0] / pivot;
  for (int r = 1; r < n; ++r) {
    pivot = sys.diag[r] - sys.lower[r] * c[r - 1];
    if (std::abs(pivot) < kPivotFloor) throw SingularSystem(r + 1, pivot);
    c[r] = r + 1 < n ? sys.upper[r] / pivot : 0.0;
    x[r] = (sys.rhs[r] - sys.lower[r] * x[r - 1]) / pivot;
  }
  for (int r = n - 2; r >= 0; --r) x[r] -= c[r] * x[r + 1];
  return x;
}

bool diagonally_dominant(const TridiagonalSystem& sys) {
  const int n = sys.size();
  for (int r = 0; r < n; ++r) {
    double off = 0.0;
    if (r > 0) off += std::abs(sys.lower[r]);
    if (r + 1 < n) off += std::abs(sys.upper[r]);
    if (std::abs(sys.diag[r]) < off) return false;
  }
  return true;
}

namespace {

void check_subdomain(int k) {
  if (k != 1 && k != 2) throw InvalidInput("subdomain index must be 1 or 2");
}

void check_shapes(const SchemeCoefficients& coeffs, const SolutionField& a,
                  const SolutionField& b) {
  if (a.u1.size() != coeffs.I() || a.u2.size() != coeffs.J() ||
      b.u1.size() != coeffs.I() || b.u2.size() != coeffs.J()) {
    throw InvalidInput("solution field does not match the coefficients");
  }
}

}  // namespace

NodeArray jacobi_sweep(const SchemeCoefficients& coeffs,
                       const SolutionField& u_prev, const SolutionField& u_n,
                       int k) {
  check_subdomain(k);
  check_shapes(coeffs, u_prev, u_n);
  const SubdomainCoefficients& sc = coeffs.sub(k);
  const double diag = sc.diagonal();
  if (diag == 0.0) throw DegenerateCoefficients("zero Jacobi diagonal");
  const NodeArray& prev = u_prev.sub(k);
  const NodeArray& level = u_n.sub(k);
  NodeArray out = prev;
  for (int i = 2; i < prev.size(); ++i) {
    const double eta = sc.eta_field(i);
    out(i) = ((eta + sc.eps) * prev(i - 1) + (sc.eps - eta) * prev(i + 1) +
              level(i)) /
             diag;
  }
  return out;
}

NodeArray ac_sweep(const SchemeCoefficients& coeffs,
                   const SolutionField& u_prev, const SolutionField& u_n,
                   int k) {
  check_subdomain(k);
  check_shapes(coeffs, u_prev, u_n);
  if (!(coeffs.kappa > 0.0)) throw InvalidInput("kappa must be positive");
  const SubdomainCoefficients& sc = coeffs.sub(k);
  const double kappa = coeffs.kappa;
  const double centre = kappa - 2.0 * sc.eps - sc.gamma;
  const NodeArray& prev = u_prev.sub(k);
  const NodeArray& level = u_n.sub(k);
  NodeArray out = prev;
  for (int i = 2; i < prev.size(); ++i) {
    const double eta = sc.eta_field(i);
    out(i) = ((eta + sc.eps) * prev(i - 1) + centre * prev(i) +
              (sc.eps - eta) * prev(i + 1) + level(i)) /
             (1.0 + kappa);
  }
  return out;
}

TridiagonalSystem assemble_subdomain_system(const SchemeCoefficients& coeffs,
                                            const InterfaceRow& interface_row,
                                            const SolutionField& u_n, int k) {
  check_subdomain(k);
  check_shapes(coeffs, u_n, u_n);
  const SubdomainCoefficients& sc = coeffs.sub(k);
  const NodeArray& level = u_n.sub(k);
  const int n = level.size();
  TridiagonalSystem sys(n);
  for (int i = 2; i < n; ++i) {
    const int r = i - 1;
    const double eta = sc.eta_field(i);
    sys.lower[r] = -(eta + sc.eps);
    sys.diag[r] = sc.diagonal();
    sys.upper[r] = eta - sc.eps;
    sys.rhs[r] = level(i);
  }
  if (k == 1) {
    sys.diag[0] = 1.0;
    sys.rhs[0] = level(1);
    sys.lower[n - 1] = interface_row.neighbor;
    sys.diag[n - 1] = interface_row.self;
    sys.rhs[n - 1] = interface_row.rhs;
  } else {
    sys.diag[0] = interface_row.self;
    sys.upper[0] = interface_row.neighbor;
    sys.rhs[0] = interface_row.rhs;
    sys.diag[n - 1] = 1.0;
    sys.rhs[n - 1] = level(n);
  }
  return sys;
}

NodeArray implicit_subdomain_step(const SchemeCoefficients& coeffs,
                                  const InterfaceRow& interface_row,
                                  const SolutionField& u_n, int k) {
  const TridiagonalSystem sys =
      assemble_subdomain_system(coeffs, interface_row, u_n, k);
  NodeArray out(sys.size());
  out.values() = thomas_solve(sys);
  return out;
}

}  // namespace schwarz1d
