// Test-only oracles, kept independent of the library code paths they check:
// closed forms for the Moebius transforms, brute-force partial sums over
// explicit coefficient formulas, contour-integral Taylor coefficients and a
// dense sign scan for root locations.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

namespace oracles {

using complex = std::complex<double>;

// (a+w)/(1+aw) and its n-th Taylor-coefficient-at-w (derivative over n!).
inline complex moebius_plus_value(double a, complex w) {
  return (a + w) / (1.0 + a * w);
}
inline complex moebius_plus_deriv(double a, int n, complex w) {
  return (1.0 - a * a) * std::pow(complex{-a, 0.0}, n - 1) /
         std::pow(1.0 + a * w, n + 1);
}

// (a-w)/(1-aw) and its derivatives.
inline complex moebius_minus_value(double a, complex w) {
  return (a - w) / (1.0 - a * w);
}
inline complex moebius_minus_deriv(double a, int n, complex w) {
  return -(1.0 - a * a) * std::pow(complex{a, 0.0}, n - 1) /
         std::pow(1.0 - a * w, n + 1);
}

// Geometric closed forms for the Moebius coefficient moduli
// |A_n| = (1-a^2) a^(n-1), n >= 1 (identical for the plus and minus family).
inline double moebius_majorant_from1(double a, double r) {
  return (1.0 - a * a) * r / (1.0 - a * r);
}
inline double moebius_quadratic_from1(double a, double r) {
  const double q = (1.0 - a * a) * r;
  return q * q / (1.0 - a * a * r * r);
}
inline double moebius_area(double a, double r) {
  const double c = (1.0 - a * a) * r;
  const double d = 1.0 - a * a * r * r;
  return c * c / (d * d);
}

// Brute-force partial sums over an explicit |a_n| generator.
inline double brute_sum(const std::function<double(std::size_t)>& term,
                        std::size_t n_start, std::size_t n_end) {
  double acc = 0.0;
  for (std::size_t n = n_start; n <= n_end; ++n) {
    acc += term(n);
  }
  return acc;
}

// Taylor coefficient via the trapezoidal Cauchy integral on |w| = rho;
// spectrally accurate for analytic integrands.
inline complex cauchy_coeff(const std::function<complex(complex)>& fn, int n,
                            double rho = 0.5, int points = 512) {
  complex acc{0.0, 0.0};
  for (int j = 0; j < points; ++j) {
    const double theta = 2.0 * M_PI * j / points;
    const complex w = std::polar(rho, theta);
    acc += fn(w) * std::polar(1.0, -n * theta);
  }
  return acc / (static_cast<double>(points) * std::pow(rho, n));
}

// First sign change (negative -> nonnegative) of fn on [lo, hi] stepped by
// step; the returned pair brackets the change.
inline std::optional<std::pair<double, double>> sign_scan(
    const std::function<double(double)>& fn, double lo, double hi, double step) {
  double x = lo;
  double fx = fn(x);
  while (x < hi) {
    const double y = std::min(x + step, hi);
    const double fy = fn(y);
    if (fx < 0.0 && fy >= 0.0) {
      return std::make_pair(x, y);
    }
    x = y;
    fx = fy;
  }
  return std::nullopt;
}

inline double schwarz_pick_bound(double a0, double w_mod) {
  return (a0 + w_mod) / (1.0 + a0 * w_mod);
}

inline double lemma2_deriv_bound(double f_mod, int n, double w_mod) {
  return (1.0 - f_mod * f_mod) /
         (std::pow(1.0 - w_mod, n - 1) * (1.0 - w_mod * w_mod));
}

}  // namespace oracles
