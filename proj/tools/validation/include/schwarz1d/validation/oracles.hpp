#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "schwarz1d/analysis.hpp"
#include "schwarz1d/schemes.hpp"

// Reference implementations used to check the library. Deliberately plain
// and independent of the production code paths.
namespace schwarz1d::validation {

using DenseMatrix = std::vector<std::vector<double>>;

// Gaussian elimination with partial pivoting.
std::vector<double> dense_solve(DenseMatrix a, std::vector<double> b);

// All eigenvalues through a complex Schur decomposition.
std::vector<std::complex<double>> dense_eigenvalues(const DenseMatrix& a);

// Eigenvalues of a symmetric matrix.
std::vector<double> dense_symmetric_eigenvalues(const DenseMatrix& a);

double dense_spectral_radius(const DenseMatrix& a);

// D^-1 A D for diagonal D.
DenseMatrix diagonal_similarity(const DenseMatrix& a,
                                const std::vector<double>& d);

DenseMatrix to_dense(const TridiagonalSystem& system);
DenseMatrix to_dense(const IterationMatrix& m);

// Tridiagonal Toeplitz matrix with constant bands.
DenseMatrix toeplitz_tridiagonal(double p_minus, double p0, double p_plus,
                                 int n);

std::vector<double> multiply(const DenseMatrix& a, const std::vector<double>& x);

using Surface = std::function<double(double, double)>;

struct SaddleDifferences {
  double d_alpha = 0.0;
  double d_beta = 0.0;
  double d_alpha_alpha = 0.0;
  double d_beta_beta = 0.0;
  double d_alpha_beta = 0.0;
};

// Central differences of f at (a, b) with step h.
SaddleDifferences saddle_differences(const Surface& f, double a, double b,
                                     double h);

}  // namespace schwarz1d::validation
