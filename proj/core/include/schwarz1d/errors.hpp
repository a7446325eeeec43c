#pragma once

#include <stdexcept>
#include <string>

namespace schwarz1d {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: preconditions, malformed configuration, unsupported combinations.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Failures that only show up while computing: singular pivots, breakdowns,
// non-convergence.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public NumericalError {
 public:
  SingularSystem(int row, double pivot);
  int row() const { return row_; }
  double pivot() const { return pivot_; }

 private:
  int row_;
  double pivot_;
};

class DegenerateCoefficients : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A zero entry in an R-recursion table. subdomain is 1 or 2, index is the
// 1-based node index of the vanishing entry.
class RecursionBreakdown : public NumericalError {
 public:
  RecursionBreakdown(int subdomain, int index);
  int subdomain() const { return subdomain_; }
  int index() const { return index_; }

 private:
  int subdomain_;
  int index_;
};

class OptimalUndefined : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ComplexSpectrum : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class EigenNonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace schwarz1d
