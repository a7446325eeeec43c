#include "schwarz1d/interface.hpp"

#include <cmath>

namespace schwarz1d {

InterfaceCondition InterfaceCondition::classic_same_level() {
  return {InterfaceKind::ClassicSameLevel, 1.0, 1.0, 0.0, 0.0};
}

InterfaceCondition InterfaceCondition::classic_lagged() {
  return {InterfaceKind::ClassicLagged, 0.0, 0.0, 0.0, 0.0};
}

InterfaceCondition InterfaceCondition::relaxation(double omega1,
                                                  double omega2) {
  return {InterfaceKind::Relaxation, omega1, omega2, 0.0, 0.0};
}

InterfaceCondition InterfaceCondition::optimal(double alpha, double beta) {
  return {InterfaceKind::Optimal, 1.0, 1.0, alpha, beta};
}

double InterfaceCondition::weight1() const {
  switch (kind) {
    case InterfaceKind::ClassicSameLevel: return 1.0;
    case InterfaceKind::ClassicLagged: return 0.0;
    default: return omega1;
  }
}

double InterfaceCondition::weight2() const {
  switch (kind) {
    case InterfaceKind::ClassicSameLevel: return 1.0;
    case InterfaceKind::ClassicLagged: return 0.0;
    default: return omega2;
  }
}

void InterfaceCondition::validate() const {
  if (kind == InterfaceKind::Relaxation &&
      (!std::isfinite(omega1) || !std::isfinite(omega2))) {
    throw InvalidInput("relaxation weights must be finite");
  }
  if (kind == InterfaceKind::Optimal) {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
      throw InvalidInput("optimal interface parameters must be finite");
    }
    if ((alpha + 1.0) * (beta - 1.0) + 1.0 == 0.0) {
      throw InvalidInput(
          "optimal interface parameters violate (alpha+1)(beta-1)+1 != 0");
    }
  }
}

DonorSnapshot DonorSnapshot::take(const SolutionField& u) {
  const int I = u.u1.size();
  return {u.u1(I), u.u1(I - 1), u.u2(1), u.u2(2)};
}

InterfaceValues exchange_explicit(const InterfaceCondition& cond,
                                  const NodeArray& u1, const NodeArray& u2,
                                  const NodeArray& u1_prev,
                                  const NodeArray& u2_prev) {
  if (cond.kind == InterfaceKind::Optimal) {
    throw InvalidInput("optimal interface condition has no explicit exchange");
  }
  cond.validate();
  const int I = u1.size();
  const double w1 = cond.weight1();
  const double w2 = cond.weight2();
  InterfaceValues out;
  out.u1_last = u2_prev(2) + w1 * (u2(2) - u2_prev(2));
  out.u2_first = u1_prev(I - 1) + w2 * (u1(I - 1) - u1_prev(I - 1));
  return out;
}

InterfaceRows optimal_rows(const InterfaceCondition& cond,
                           const DonorSnapshot& donors) {
  if (cond.kind != InterfaceKind::Optimal) {
    throw InvalidInput("optimal_rows needs the optimal interface condition");
  }
  cond.validate();
  if (cond.alpha + 1.0 == 0.0) {
    throw DegenerateCoefficients(
        "optimal row for subdomain 1 drops u1[I] (alpha = -1)");
  }
  if (cond.beta - 1.0 == 0.0) {
    throw DegenerateCoefficients(
        "optimal row for subdomain 2 drops u2[1] (beta = 1)");
  }
  InterfaceRows rows;
  rows.sub1 = {-1.0, 1.0 + cond.alpha,
               (donors.u2_second - donors.u2_first) +
                   cond.alpha * donors.u2_second};
  rows.sub2 = {1.0, cond.beta - 1.0,
               (donors.u1_last - donors.u1_before_last) +
                   cond.beta * donors.u1_before_last};
  return rows;
}

InterfaceRows classic_rows(const DonorSnapshot& donors) {
  return {dirichlet_row(donors.u2_second), dirichlet_row(donors.u1_before_last)};
}

InterfaceRows implicit_rows(const InterfaceCondition& cond,
                            const DonorSnapshot& donors) {
  switch (cond.kind) {
    case InterfaceKind::Optimal: return optimal_rows(cond, donors);
    case InterfaceKind::ClassicSameLevel:
    case InterfaceKind::ClassicLagged: return classic_rows(donors);
    case InterfaceKind::Relaxation: break;
  }
  throw InvalidInput("relaxation exchange is defined for explicit sweeps only");
}

}  // namespace schwarz1d
