#include "bohrlab/verify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "bohrlab/functionals.hpp"
#include "bohrlab/schwarz.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab {

namespace {

SchwarzFn make_variant(int order, int variant) {
  switch (variant) {
    case 0:
      return SchwarzFn::monomial(order);
    case 1:
      return SchwarzFn::scaled_monomial(order, std::polar(0.85, 0.7));
    default:
      return SchwarzFn::monomial_times_blaschke(order, {{0.4, 0.25}}, 0.3);
  }
}

CertifiedReal evaluate(const RadiusProblem& problem, const FunctionalInput& in) {
  switch (problem.family) {
    case Family::th1:
      return lhs_th1(in);
    case Family::th2:
      return lhs_th2(in);
    case Family::th6:
      return lhs_th6(in, lambda_coeff(problem.m, problem.k));
    case Family::th3:
      return lhs_th3(in);
    case Family::th5:
      return lhs_th5(in, problem.n);
    case Family::th4:
      return lhs_th4(in);
    default:
      throw std::invalid_argument("family has no inequality functional");
  }
}

}  // namespace

VerifyOutcome run_inequality_suite(const RadiusProblem& problem, int samples,
                                   std::uint64_t seed, double r_margin) {
  if (samples < 1) {
    throw std::invalid_argument("sample count must be positive");
  }
  if (!(r_margin > 0.0) || r_margin >= 1.0) {
    throw std::invalid_argument("r margin must lie in (0, 1)");
  }

  VerifyOutcome outcome;
  outcome.radius = problem.family == Family::th6
                       ? rk_closed_form(problem.k)
                       : smallest_positive_root(problem).radius;
  outcome.r_used = (1.0 - r_margin) * outcome.radius;
  outcome.samples = samples;

  const double r = outcome.r_used;
  const std::size_t order =
      std::max(TruncatedSeries::default_truncation_order(),
               TruncatedSeries::order_for(r, 1e-12));

  std::vector<TruncatedSeries> functions;
  functions.reserve(static_cast<std::size_t>(samples));
  // degenerate edges first: the constant of modulus one, the identity, zero
  functions.push_back(TruncatedSeries::constant(1.0, order));
  functions.push_back(TruncatedSeries::identity(order));
  functions.push_back(TruncatedSeries::constant(0.0, order));
  for (int j = 3; j < samples; ++j) {
    functions.push_back(sample_unit_ball(seed + static_cast<std::uint64_t>(j),
                                         static_cast<std::size_t>(j % 4), order));
  }

  constexpr double kTolerance = 1e-9;
  for (int variant = 0; variant < 3; ++variant) {
    const SchwarzFn omega_m = make_variant(problem.m, variant);
    const SchwarzFn omega_p = make_variant(problem.p, variant);
    const SchwarzFn omega_k = make_variant(problem.k, variant);
    for (const auto& f : functions) {
      const auto in = FunctionalInput::at(f, omega_m, omega_p, omega_k, r);
      const CertifiedReal lhs = evaluate(problem, in);
      ++outcome.evaluations;
      outcome.max_lhs = std::max(outcome.max_lhs, lhs.upper());
      if (lhs.upper() > 1.0 + kTolerance) {
        ++outcome.failures;
      }
    }
  }
  return outcome;
}

}  // namespace bohrlab
