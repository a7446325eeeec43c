#include "schwarz1d/validation/oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schwarz1d::validation {

std::vector<double> dense_solve(DenseMatrix a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a[r][k]) > std::abs(a[pivot][k])) pivot = r;
    }
    if (a[pivot][k] == 0.0) throw std::runtime_error("singular dense system");
    std::swap(a[k], a[pivot]);
    std::swap(b[k], b[pivot]);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a[r][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      b[r] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t c = k + 1; c < n; ++c) s -= a[k][c] * x[c];
    x[k] = s / a[k][k];
  }
  return x;
}

std::vector<std::complex<double>> dense_eigenvalues(const DenseMatrix& a) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = a[r][c];
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense eigensolve did not converge");
  }
  const Eigen::VectorXcd values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

std::vector<double> dense_symmetric_eigenvalues(const DenseMatrix& a) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = a[r][c];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolve did not converge");
  }
  const Eigen::VectorXd values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

DenseMatrix diagonal_similarity(const DenseMatrix& a,
                                const std::vector<double>& d) {
  DenseMatrix out = a;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) out[r][c] = a[r][c] * d[c] / d[r];
  }
  return out;
}

double dense_spectral_radius(const DenseMatrix& a) {
  double radius = 0.0;
  for (const auto& v : dense_eigenvalues(a)) radius = std::max(radius, std::abs(v));
  return radius;
}

DenseMatrix to_dense(const TridiagonalSystem& system) {
  const std::size_t n = system.diag.size();
  DenseMatrix a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = system.diag[i];
    if (i > 0) a[i][i - 1] = system.lower[i];
    if (i + 1 < n) a[i][i + 1] = system.upper[i];
  }
  return a;
}

DenseMatrix to_dense(const IterationMatrix& m) {
  DenseMatrix a(m.n, std::vector<double>(m.n));
  for (int r = 0; r < m.n; ++r) {
    for (int c = 0; c < m.n; ++c) a[r][c] = m(r, c);
  }
  return a;
}

DenseMatrix toeplitz_tridiagonal(double p_minus, double p0, double p_plus,
                                 int n) {
  DenseMatrix a(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = p0;
    if (i > 0) a[i][i - 1] = p_minus;
    if (i + 1 < n) a[i][i + 1] = p_plus;
  }
  return a;
}

std::vector<double> multiply(const DenseMatrix& a,
                             const std::vector<double>& x) {
  std::vector<double> y(a.size(), 0.0);
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) y[r] += a[r][c] * x[c];
  }
  return y;
}

SaddleDifferences saddle_differences(const Surface& f, double a, double b,
                                     double h) {
  SaddleDifferences d;
  const double centre = f(a, b);
  const double ap = f(a + h, b);
  const double am = f(a - h, b);
  const double bp = f(a, b + h);
  const double bm = f(a, b - h);
  d.d_alpha = (ap - am) / (2 * h);
  d.d_beta = (bp - bm) / (2 * h);
  d.d_alpha_alpha = (ap - 2 * centre + am) / (h * h);
  d.d_beta_beta = (bp - 2 * centre + bm) / (h * h);
  d.d_alpha_beta =
      (f(a + h, b + h) - f(a + h, b - h) - f(a - h, b + h) + f(a - h, b - h)) /
      (4 * h * h);
  return d;
}

}  // namespace schwarz1d::validation
