#pragma once

#include "schwarz1d/core.hpp"
#include "schwarz1d/schemes.hpp"

namespace schwarz1d {

enum class InterfaceKind { ClassicSameLevel, ClassicLagged, Relaxation, Optimal };

struct InterfaceCondition {
  InterfaceKind kind = InterfaceKind::ClassicSameLevel;
  double omega1 = 1.0;
  double omega2 = 1.0;
  double alpha = 0.0;
  double beta = 0.0;

  static InterfaceCondition classic_same_level();
  static InterfaceCondition classic_lagged();
  static InterfaceCondition relaxation(double omega1, double omega2);
  static InterfaceCondition optimal(double alpha, double beta);

  // Exchange weights actually applied by exchange_explicit.
  double weight1() const;
  double weight2() const;

  void validate() const;
  bool operator==(const InterfaceCondition&) const = default;
};

// Overlap values of the previous outer iterate, taken before any subdomain
// of the current outer iteration is updated.
struct DonorSnapshot {
  double u1_last = 0.0;         // u1[I]
  double u1_before_last = 0.0;  // u1[I-1]
  double u2_first = 0.0;        // u2[1]
  double u2_second = 0.0;       // u2[2]

  static DonorSnapshot take(const SolutionField& u);
};

struct InterfaceValues {
  double u1_last = 0.0;   // new u1[I]
  double u2_first = 0.0;  // new u2[1]
};

// Post-sweep exchange for explicit schemes:
//   u1[I] = u2_prev[2] + w1 (u2[2] - u2_prev[2])
//   u2[1] = u1_prev[I-1] + w2 (u1[I-1] - u1_prev[I-1])
InterfaceValues exchange_explicit(const InterfaceCondition& cond,
                                  const NodeArray& u1, const NodeArray& u2,
                                  const NodeArray& u1_prev,
                                  const NodeArray& u2_prev);

struct InterfaceRows {
  InterfaceRow sub1;
  InterfaceRow sub2;
};

// Robin-type rows (-1, 1+alpha) and (beta-1, 1) with right-hand sides from
// the neighbour's previous iterate.
InterfaceRows optimal_rows(const InterfaceCondition& cond,
                           const DonorSnapshot& donors);

// Dirichlet pins u1[I] = u2[2] and u2[1] = u1[I-1] from the previous iterate.
InterfaceRows classic_rows(const DonorSnapshot& donors);

// Rows for the implicit scheme under any non-relaxation condition.
InterfaceRows implicit_rows(const InterfaceCondition& cond,
                            const DonorSnapshot& donors);

}  // namespace schwarz1d
