#pragma once

#include <utility>
#include <vector>

#include "bohrlab/radius.hpp"

namespace bohrlab {

/// One row of a sharpness or figure sweep.
struct SweepRecord {
  Family family = Family::th1;
  int m = 0;
  int p = 0;
  int k = 0;
  int n = 0;
  double a = 0.0;
  double r = 0.0;
  double lhs = 0.0;
  double gap = 0.0;  // lhs - 1
  bool at_root = false;
};

/// The extremal-family gap factor: G3, G5, G8, G10, H2 or H4 evaluated at
/// (a, r). closed_gap() multiplies in the family prefactor; the factor alone
/// is what converges to limit_gap() as a -> 1-.
double gap_factor(const RadiusProblem& problem, double a, double r);

/// Closed-form lhs - 1 for the Moebius extremal family ((a+z)/(1+az) for
/// th1/th2/th6, (a-z)/(1-az) for th3/th5/th4) composed with monomial Schwarz
/// functions at z = r. For th3/th5/th4 the form is valid for r^m < a and
/// a(r^k + r^m) < 1; violations throw std::domain_error.
double closed_gap(const RadiusProblem& problem, double a, double r);

/// The a -> 1- limit of the gap factor. Negative below the family's radius,
/// positive above it, on the family's domain.
double limit_gap(const RadiusProblem& problem, double r);

/// Ceiling of the closed form's validity region at extremal parameter a
/// (r_mp for th1, r2_mp for th2, 1 for th6, min(a^(1/m), root of
/// a(r^k+r^m)=1) for th3/th5/th4).
double sharpness_ceiling(const RadiusProblem& problem, double a);

/// Evaluates the closed-form lhs just below and just above the family's
/// radius (r = R -/+ delta, the upper point clamped inside the validity
/// region). For a close enough to 1 the upper record's gap is positive,
/// which is the "cannot be improved" half of each statement.
std::pair<SweepRecord, SweepRecord> sharpness_sweep(const RadiusProblem& problem,
                                                    double a, double delta);

/// Residual-vs-r rows over [r_start, r_end] with the given step, clipped to
/// the family's domain; a record at the root itself is inserted and flagged.
std::vector<SweepRecord> figure_sweep(const RadiusProblem& problem, double r_start,
                                      double r_end, double step);

}  // namespace bohrlab
