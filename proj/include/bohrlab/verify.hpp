#pragma once

#include <cstdint>

#include "bohrlab/radius.hpp"

namespace bohrlab {

/// Outcome of a sampled inequality run for one theorem family.
struct VerifyOutcome {
  int samples = 0;        // unit-ball functions drawn
  int evaluations = 0;    // samples x Schwarz variants
  int failures = 0;       // evaluations with value + error > 1 + 1e-9
  double max_lhs = 0.0;   // max over evaluations of value + error
  double radius = 0.0;    // the family's solved radius
  double r_used = 0.0;    // (1 - r_margin) * radius

  bool passed() const { return failures == 0; }
};

/// Draws `samples` unit-ball functions (the first three are the degenerate
/// f = 1, f = z and f = 0), pairs each with three Schwarz-function variants
/// of the required orders, and evaluates the family's left-hand side at
/// r = (1 - r_margin) * R. Certified: the check is on value + error_bound.
VerifyOutcome run_inequality_suite(const RadiusProblem& problem, int samples,
                                   std::uint64_t seed, double r_margin);

}  // namespace bohrlab
