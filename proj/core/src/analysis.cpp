#include "schwarz1d/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace schwarz1d {

namespace {

double checked_diagonal(const SubdomainCoefficients& sc) {
  const double diag = sc.diagonal();
  if (diag == 0.0) {
    throw DegenerateCoefficients("1 + 2 eps + gamma vanishes");
  }
  return diag;
}

}  // namespace

double scarborough_lhs_explicit(const SchemeCoefficients& coeffs) {
  double out = 0.0;
  for (int k = 1; k <= 2; ++k) {
    const SubdomainCoefficients& sc = coeffs.sub(k);
    const double diag = std::abs(checked_diagonal(sc));
    for (int i = 2; i < sc.eta_field.size(); ++i) {
      const double eta = sc.eta_field(i);
      out = std::max(out,
                     (std::abs(sc.eps + eta) + std::abs(eta - sc.eps)) / diag);
    }
  }
  return out;
}

double scarborough_lhs_ac(const SchemeCoefficients& coeffs) {
  if (!(coeffs.kappa > 0.0)) throw InvalidInput("kappa must be positive");
  const double kappa = coeffs.kappa;
  double out = 0.0;
  for (int k = 1; k <= 2; ++k) {
    const SubdomainCoefficients& sc = coeffs.sub(k);
    const double centre = std::abs(kappa - 2.0 * sc.eps - sc.gamma);
    for (int i = 2; i < sc.eta_field.size(); ++i) {
      const double eta = sc.eta_field(i);
      out = std::max(out, (std::abs(sc.eps + eta) + centre +
                           std::abs(sc.eps - eta)) /
                              (1.0 + kappa));
    }
  }
  return out;
}

const char* to_string(EndpointConvention c) {
  return c == EndpointConvention::LastInterior ? "R1(I-1)" : "R1(I-2)";
}

double RecursionTable::r1_endpoint() const {
  return convention == EndpointConvention::LastInterior ? R1(I - 1)
                                                        : R1(I - 2);
}

RecursionTable recursion_tables(const SchemeCoefficients& coeffs,
                                EndpointConvention convention) {
  const int I = coeffs.I();
  const int J = coeffs.J();
  if (I < 3 || J < 3) throw InvalidInput("recursions need I >= 3 and J >= 3");
  if (convention == EndpointConvention::SecondToLastInterior && I < 4) {
    throw InvalidInput("R1(I-2) does not exist for I = 3");
  }
  RecursionTable table;
  table.I = I;
  table.J = J;
  table.convention = convention;
  table.r1.assign(I - 2, 0.0);
  table.r2.assign(J - 2, 0.0);

  auto check = [](double value, int subdomain, int index) {
    if (!std::isfinite(value) || std::abs(value) < 1e-300) {
      throw RecursionBreakdown(subdomain, index);
    }
  };

  const SubdomainCoefficients& s1 = coeffs.sub1;
  const double d1 = s1.diagonal();
  table.r1[0] = d1;
  check(d1, 1, 2);
  for (int i = 3; i <= I - 1; ++i) {
    const double num =
        (s1.eta_field(i - 1) - s1.eps) * (s1.eta_field(i) + s1.eps);
    table.r1[i - 2] = d1 + num / table.r1[i - 3];
    check(table.r1[i - 2], 1, i);
  }

  const SubdomainCoefficients& s2 = coeffs.sub2;
  const double d2 = s2.diagonal();
  table.r2[J - 3] = d2;
  check(d2, 2, J - 1);
  for (int j = J - 2; j >= 2; --j) {
    const double num =
        (s2.eta_field(j) - s2.eps) * (s2.eta_field(j + 1) + s2.eps);
    table.r2[j - 2] = d2 + num / table.r2[j - 1];
    check(table.r2[j - 2], 2, j);
  }
  return table;
}

namespace {

struct Endpoints {
  double q;   // eta1[I-1] - eps1
  double p;   // eta2[2] + eps2
  double r1;  // R1 endpoint
  double r2;  // R2(2)
};

Endpoints endpoints(const RecursionTable& table,
                    const SchemeCoefficients& coeffs) {
  if (table.I != coeffs.I() || table.J != coeffs.J()) {
    throw InvalidInput("recursion table does not match the coefficients");
  }
  return {coeffs.sub1.eta_field(table.I - 1) - coeffs.sub1.eps,
          coeffs.sub2.eta_field(2) + coeffs.sub2.eps, table.r1_endpoint(),
          table.R2(2)};
}

}  // namespace

double contraction_classic(const RecursionTable& table,
                           const SchemeCoefficients& coeffs) {
  const Endpoints e = endpoints(table, coeffs);
  const double denom = e.r1 * e.r2;
  if (denom == 0.0) throw DegenerateCoefficients("R1 R2 vanishes");
  return -(e.q * e.p) / denom;
}

OptimalParams optimal_params(const RecursionTable& table,
                             const SchemeCoefficients& coeffs) {
  const Endpoints e = endpoints(table, coeffs);
  if (e.p == 0.0) {
    throw OptimalUndefined(
        "optimal condition undefined: eta2 + eps2 vanishes at node 2");
  }
  if (e.q == 0.0) {
    throw OptimalUndefined(
        "optimal condition undefined: eta1 - eps1 vanishes at node I-1");
  }
  if (e.r1 * e.r2 + e.q * e.p == 0.0) {
    throw OptimalUndefined(
        "optimal condition undefined: R1 R2 + (eta1 - eps1)(eta2 + eps2) = 0");
  }
  return {e.r2 / e.p - 1.0, e.r1 / e.q + 1.0};
}

double contraction_optimal(const RecursionTable& table,
                           const SchemeCoefficients& coeffs, double alpha,
                           double beta) {
  const Endpoints e = endpoints(table, coeffs);
  const double den_alpha = (alpha + 1.0) * e.r1 + e.q;
  const double den_beta = (beta - 1.0) * e.r2 + e.p;
  if (den_alpha == 0.0) {
    throw DegenerateCoefficients(
        "alpha factor denominator (alpha+1) R1 + (eta1 - eps1) vanishes");
  }
  if (den_beta == 0.0) {
    throw DegenerateCoefficients(
        "beta factor denominator (beta-1) R2 + (eta2 + eps2) vanishes");
  }
  const double alpha_factor = ((alpha + 1.0) * e.p - e.r2) / den_alpha;
  const double beta_factor = ((beta - 1.0) * e.q - e.r1) / den_beta;
  return -alpha_factor * beta_factor;
}

std::vector<double> tridiag_eigenvalues(double p_minus, double p0,
                                        double p_plus, int n) {
  if (n < 1) throw InvalidInput("matrix order must be positive");
  const double product = p_minus * p_plus;
  if (product < 0.0) {
    throw ComplexSpectrum("p_minus * p_plus < 0: eigenvalues are complex");
  }
  const double root = std::sqrt(product);
  std::vector<double> out(n);
  for (int i = 1; i <= n; ++i) {
    out[i - 1] =
        p0 - 2.0 * std::cos(i * std::numbers::pi / (n + 1)) * root;
  }
  return out;
}

int IterationMatrix::index_of(int subdomain, int node) const {
  for (int r = 0; r < n; ++r) {
    if (labels[r].subdomain == subdomain && labels[r].node == node) return r;
  }
  return -1;
}

namespace {

struct SweepRow {
  double left;
  double centre;
  double right;
};

SweepRow sweep_row(const SubdomainCoefficients& sc, int i, double kappa,
                   ExplicitScheme scheme) {
  const double eta = sc.eta_field(i);
  if (scheme == ExplicitScheme::Jacobi) {
    const double diag = checked_diagonal(sc);
    return {(eta + sc.eps) / diag, 0.0, (sc.eps - eta) / diag};
  }
  const double scale = 1.0 + kappa;
  return {(eta + sc.eps) / scale, (kappa - 2.0 * sc.eps - sc.gamma) / scale,
          (sc.eps - eta) / scale};
}

}  // namespace

IterationMatrix assemble_iteration_matrix(const SchemeCoefficients& coeffs,
                                          const InterfaceCondition& cond,
                                          ExplicitScheme scheme) {
  if (cond.kind == InterfaceKind::Optimal) {
    throw InvalidInput("optimal interface has no explicit iteration matrix");
  }
  cond.validate();
  if (scheme == ExplicitScheme::ArtificialCompressibility &&
      !(coeffs.kappa > 0.0)) {
    throw InvalidInput("kappa must be positive");
  }
  const int I = coeffs.I();
  const int J = coeffs.J();
  const bool augmented = cond.kind != InterfaceKind::ClassicSameLevel;

  IterationMatrix m;
  const int first1 = 2;
  const int last1 = augmented ? I : I - 1;
  const int first2 = augmented ? 1 : 2;
  const int last2 = J - 1;
  for (int i = first1; i <= last1; ++i) m.labels.push_back({1, i});
  for (int j = first2; j <= last2; ++j) m.labels.push_back({2, j});
  m.n = static_cast<int>(m.labels.size());
  m.values.assign(static_cast<std::size_t>(m.n) * m.n, 0.0);

  const int offset2 = last1 - first1 + 1;
  auto col1 = [&](int i) { return i - first1; };
  auto col2 = [&](int j) { return offset2 + j - first2; };
  // Column holding the current value of a node, following the overlap map
  // for the nodes that are not states of the reduced system.
  auto column_of = [&](int subdomain, int node) {
    if (subdomain == 1) {
      if (node == 1) return -1;
      if (node == I && !augmented) return col2(2);
      return col1(node);
    }
    if (node == J) return -1;
    if (node == 1 && !augmented) return col1(I - 1);
    return col2(node);
  };

  auto fill_row = [&](int row, int subdomain, int node) {
    const SweepRow s =
        sweep_row(coeffs.sub(subdomain), node, coeffs.kappa, scheme);
    const int left = column_of(subdomain, node - 1);
    const int right = column_of(subdomain, node + 1);
    if (left >= 0) m(row, left) += s.left;
    m(row, column_of(subdomain, node)) += s.centre;
    if (right >= 0) m(row, right) += s.right;
  };

  for (int i = 2; i <= I - 1; ++i) fill_row(col1(i), 1, i);
  for (int j = 2; j <= J - 1; ++j) fill_row(col2(j), 2, j);

  if (augmented) {
    const double w1 = cond.weight1();
    const double w2 = cond.weight2();
    const int r1 = col1(I);
    const int donor1 = col2(2);
    const int r2 = col2(1);
    const int donor2 = col1(I - 1);
    for (int c = 0; c < m.n; ++c) {
      m(r1, c) = w1 * m(donor1, c);
      m(r2, c) = w2 * m(donor2, c);
    }
    m(r1, donor1) += 1.0 - w1;
    m(r2, donor2) += 1.0 - w2;
  }
  return m;
}

std::vector<std::complex<double>> eigenvalues(const IterationMatrix& m) {
  if (m.n < 1) throw InvalidInput("matrix must be nonempty");
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      dense(m.values.data(), m.n, m.n);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(Eigen::MatrixXd(dense), false);
  if (solver.info() != Eigen::Success) {
    throw EigenNonConvergence("eigenvalue iteration did not converge");
  }
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

double spectral_radius(const IterationMatrix& m) {
  double out = 0.0;
  for (const auto& lambda : eigenvalues(m)) out = std::max(out, std::abs(lambda));
  return out;
}

}  // namespace schwarz1d
