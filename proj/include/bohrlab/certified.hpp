#pragma once

#include <cmath>
#include <complex>

namespace bohrlab {

/// A nonnegative real quantity together with an upper bound on the
/// truncation error committed while computing it. Inequality checks against
/// certified values use upper(), which makes every comparison one-sided-safe.
struct CertifiedReal {
  double value = 0.0;
  double error_bound = 0.0;

  double upper() const { return value + error_bound; }
};

/// A complex value with a radius of uncertainty (truncation error of the
/// underlying series). The true value lies in the closed disk of radius
/// error_bound around value.
struct CertifiedComplex {
  std::complex<double> value{0.0, 0.0};
  double error_bound = 0.0;

  double modulus_upper() const { return std::abs(value) + error_bound; }
  double modulus_lower() const {
    return std::max(0.0, std::abs(value) - error_bound);
  }
};

}  // namespace bohrlab
