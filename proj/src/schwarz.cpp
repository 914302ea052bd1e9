#include "bohrlab/schwarz.hpp"

#include <cmath>
#include <stdexcept>

namespace bohrlab {

namespace {

std::complex<double> int_pow(std::complex<double> z, int n) {
  std::complex<double> acc{1.0, 0.0};
  while (n > 0) {
    if (n & 1) {
      acc *= z;
    }
    z *= z;
    n >>= 1;
  }
  return acc;
}

void check_order(int order) {
  if (order < 1) {
    throw std::invalid_argument("Schwarz vanishing order must be at least 1");
  }
}

}  // namespace

SchwarzFn SchwarzFn::monomial(int order) {
  check_order(order);
  return SchwarzFn(Kind::Monomial, order);
}

SchwarzFn SchwarzFn::scaled_monomial(int order, std::complex<double> scale) {
  check_order(order);
  const double mag = std::abs(scale);
  if (mag == 0.0 || mag > 1.0) {
    throw std::invalid_argument("scale must satisfy 0 < |c| <= 1");
  }
  SchwarzFn fn(Kind::ScaledMonomial, order);
  fn.scale_ = scale;
  return fn;
}

SchwarzFn SchwarzFn::monomial_times_blaschke(int order,
                                             std::vector<std::complex<double>> zeros,
                                             double phase) {
  check_order(order);
  for (const auto& zero : zeros) {
    const double mag = std::abs(zero);
    if (mag == 0.0 || mag >= 1.0) {
      throw std::invalid_argument(
          "Blaschke zeros must satisfy 0 < |zero| < 1 (a zero at the origin "
          "would raise the vanishing order)");
    }
  }
  SchwarzFn fn(Kind::MonomialTimesBlaschke, order);
  fn.zeros_ = std::move(zeros);
  fn.phase_ = phase;
  return fn;
}

std::complex<double> SchwarzFn::eval(std::complex<double> z) const {
  if (std::abs(z) >= 1.0) {
    throw std::domain_error("Schwarz functions are defined on the open unit disk");
  }
  const std::complex<double> zm = int_pow(z, order_);
  switch (kind_) {
    case Kind::Monomial:
      return zm;
    case Kind::ScaledMonomial:
      return scale_ * zm;
    case Kind::MonomialTimesBlaschke: {
      std::complex<double> acc = std::polar(1.0, phase_) * zm;
      for (const auto& alpha : zeros_) {
        acc *= (z - alpha) / (1.0 - std::conj(alpha) * z);
      }
      return acc;
    }
  }
  return zm;
}

double SchwarzFn::modulus_envelope(double r) const {
  if (!(r >= 0.0) || r >= 1.0) {
    throw std::domain_error("envelope radius must lie in [0, 1)");
  }
  return std::pow(r, static_cast<double>(order_));
}

bool SchwarzFn::verify_membership(std::size_t grid_size) const {
  return verify_envelope([this](std::complex<double> z) { return eval(z); }, order_,
                         grid_size);
}

bool verify_envelope(const std::function<std::complex<double>(std::complex<double>)>& fn,
                     int order, std::size_t grid_size) {
  if (grid_size < 4) {
    throw std::invalid_argument("grid too small for a meaningful check");
  }
  const auto n_radial = static_cast<std::size_t>(
      std::max(2.0, std::floor(std::sqrt(static_cast<double>(grid_size)))));
  const std::size_t n_angular = (grid_size + n_radial - 1) / n_radial;
  for (std::size_t i = 1; i <= n_radial; ++i) {
    const double r = 0.99 * static_cast<double>(i) / static_cast<double>(n_radial);
    const double envelope = std::pow(r, static_cast<double>(order));
    for (std::size_t j = 0; j < n_angular; ++j) {
      const double theta =
          2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n_angular);
      if (std::abs(fn(std::polar(r, theta))) > envelope + 1e-10) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace bohrlab
