#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace bohrlab {

namespace {

constexpr double kBallSlack = 1e-12;
constexpr double kEvalMargin = 1e-6;
constexpr std::size_t kMaxOrder = std::size_t{1} << 20;

double norm_sq(std::complex<double> z) { return std::norm(z); }

void check_eval_point(std::complex<double> w) {
  if (std::abs(w) > 1.0 - kEvalMargin) {
    throw std::domain_error("evaluation point too close to the unit circle");
  }
}

void check_radius(double r) {
  if (!(r >= 0.0) || r >= 1.0) {
    throw std::domain_error("radius must lie in [0, 1)");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<std::complex<double>> coeffs,
                                 bool ball_certified)
    : coeffs_(std::move(coeffs)), ball_certified_(ball_certified) {
  if (coeffs_.size() < 2) {
    throw std::invalid_argument("truncation order must be at least 1");
  }
  if (ball_certified_) {
    const double a0 = std::abs(coeffs_[0]);
    if (a0 > 1.0 + kBallSlack) {
      throw std::invalid_argument("ball certification requires |a0| <= 1");
    }
    const double envelope = 1.0 - a0 * a0 + kBallSlack;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      if (std::abs(coeffs_[n]) > envelope) {
        throw std::invalid_argument(
            "ball certification requires |a_n| <= 1 - |a0|^2");
      }
    }
  }
}

std::size_t TruncatedSeries::default_truncation_order() {
  static const std::size_t order = [] {
    if (const char* env = std::getenv("BOHR_LAB_TRUNC")) {
      const long parsed = std::strtol(env, nullptr, 10);
      if (parsed >= 8 && static_cast<std::size_t>(parsed) <= kMaxOrder) {
        return static_cast<std::size_t>(parsed);
      }
    }
    return std::size_t{512};
  }();
  return order;
}

std::size_t TruncatedSeries::order_for(double r, double tol) {
  check_radius(r);
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  const std::size_t base = default_truncation_order();
  if (r == 0.0) {
    return base;
  }
  // r^(T+1)/(1-r) <= tol  <=>  T+1 >= log(tol*(1-r)) / log(r)
  const double needed = std::log(tol * (1.0 - r)) / std::log(r);
  if (!(needed < static_cast<double>(kMaxOrder))) {
    return kMaxOrder;
  }
  const auto order = static_cast<std::size_t>(std::max(1.0, std::ceil(needed)));
  return std::max(base, order);
}

TruncatedSeries TruncatedSeries::constant(std::complex<double> c, std::size_t order) {
  if (order == 0) {
    order = default_truncation_order();
  }
  std::vector<std::complex<double>> coeffs(order + 1, {0.0, 0.0});
  coeffs[0] = c;
  return TruncatedSeries(std::move(coeffs), std::abs(c) <= 1.0);
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  if (order == 0) {
    order = default_truncation_order();
  }
  std::vector<std::complex<double>> coeffs(order + 1, {0.0, 0.0});
  coeffs[1] = {1.0, 0.0};
  return TruncatedSeries(std::move(coeffs), true);
}

TruncatedSeries TruncatedSeries::moebius_plus(double a, std::size_t order) {
  if (!(a >= 0.0) || a >= 1.0) {
    throw std::invalid_argument("moebius parameter must lie in [0, 1)");
  }
  if (order == 0) {
    order = default_truncation_order();
  }
  std::vector<std::complex<double>> coeffs(order + 1);
  coeffs[0] = {a, 0.0};
  double factor = 1.0 - a * a;  // (1-a^2)(-a)^(n-1), built iteratively
  for (std::size_t n = 1; n <= order; ++n) {
    coeffs[n] = {factor, 0.0};
    factor *= -a;
  }
  return TruncatedSeries(std::move(coeffs), true);
}

TruncatedSeries TruncatedSeries::moebius_minus(double a, std::size_t order) {
  if (!(a >= 0.0) || a >= 1.0) {
    throw std::invalid_argument("moebius parameter must lie in [0, 1)");
  }
  if (order == 0) {
    order = default_truncation_order();
  }
  std::vector<std::complex<double>> coeffs(order + 1);
  coeffs[0] = {a, 0.0};
  double factor = -(1.0 - a * a);  // -(1-a^2) a^(n-1)
  for (std::size_t n = 1; n <= order; ++n) {
    coeffs[n] = {factor, 0.0};
    factor *= a;
  }
  return TruncatedSeries(std::move(coeffs), true);
}

std::complex<double> TruncatedSeries::coeff(std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : std::complex<double>{0.0, 0.0};
}

CertifiedComplex TruncatedSeries::eval(std::complex<double> w) const {
  check_eval_point(w);
  if (!ball_certified_) {
    throw std::invalid_argument("eval requires a ball-certified series");
  }
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * w + coeffs_[i];
  }
  const double x = std::abs(w);
  const double tail = std::pow(x, static_cast<double>(coeffs_.size())) / (1.0 - x);
  return {acc, tail};
}

CertifiedComplex TruncatedSeries::deriv_over_factorial(std::size_t n,
                                                       std::complex<double> w) const {
  if (n < 1) {
    throw std::invalid_argument("derivative order must be at least 1");
  }
  const std::size_t order = truncation_order();
  if (n > order) {
    throw std::invalid_argument("insufficient truncation for requested derivative");
  }
  check_eval_point(w);
  if (!ball_certified_) {
    throw std::invalid_argument("deriv_over_factorial requires a ball-certified series");
  }

  // f^(n)(w)/n! = sum_j C(n+j, n) a_{n+j} w^j. The binomial-times-power
  // factor t_j = C(n+j,n) w^j is carried as one product so it stays bounded.
  std::complex<double> acc{0.0, 0.0};
  std::complex<double> t{1.0, 0.0};
  const std::size_t j_max = order - n;
  for (std::size_t j = 0;; ++j) {
    acc += coeffs_[n + j] * t;
    if (j == j_max) {
      break;
    }
    t *= w * (static_cast<double>(n + j + 1) / static_cast<double>(j + 1));
  }

  // Tail over j > j_max with |a| <= 1: ratio-test geometric majorant where
  // the term ratio has dropped below 1, full-minus-partial otherwise.
  const double x = std::abs(w);
  double tail = 0.0;
  if (x > 0.0) {
    const std::size_t j0 = j_max + 1;
    double t0 = 1.0;  // C(n+j0, n) x^j0
    for (std::size_t j = 0; j < j0; ++j) {
      t0 *= x * (static_cast<double>(n + j + 1) / static_cast<double>(j + 1));
    }
    const double ratio =
        x * (static_cast<double>(n + j0 + 1) / static_cast<double>(j0 + 1));
    if (ratio < 1.0) {
      tail = t0 / (1.0 - ratio);
    } else {
      double partial = 0.0;
      double tj = 1.0;
      for (std::size_t j = 0;; ++j) {
        partial += tj;
        if (j == j_max) {
          break;
        }
        tj *= x * (static_cast<double>(n + j + 1) / static_cast<double>(j + 1));
      }
      const double full = std::pow(1.0 - x, -static_cast<double>(n + 1));
      tail = std::max(0.0, full - partial) + 1e-12 * full;
    }
  }
  return {acc, tail};
}

CertifiedReal TruncatedSeries::majorant_sum(double r, std::size_t n_start) const {
  check_radius(r);
  if (!ball_certified_) {
    throw std::invalid_argument("majorant_sum requires a ball-certified series");
  }
  double acc = 0.0;
  double rn = std::pow(r, static_cast<double>(n_start));
  for (std::size_t n = n_start; n < coeffs_.size(); ++n) {
    acc += std::abs(coeffs_[n]) * rn;
    rn *= r;
  }
  const double tail_from = std::max(coeffs_.size(), n_start);
  const double tail = std::pow(r, static_cast<double>(tail_from)) / (1.0 - r);
  return {acc, tail};
}

CertifiedReal TruncatedSeries::quadratic_sum(double r, std::size_t n_start) const {
  check_radius(r);
  if (!ball_certified_) {
    throw std::invalid_argument("quadratic_sum requires a ball-certified series");
  }
  const double x = r * r;
  double acc = 0.0;
  double xn = std::pow(x, static_cast<double>(n_start));
  for (std::size_t n = n_start; n < coeffs_.size(); ++n) {
    acc += norm_sq(coeffs_[n]) * xn;
    xn *= x;
  }
  const double tail_from = std::max(coeffs_.size(), n_start);
  const double tail = std::pow(x, static_cast<double>(tail_from)) / (1.0 - x);
  return {acc, tail};
}

CertifiedReal TruncatedSeries::area_sum(double r) const {
  check_radius(r);
  if (!ball_certified_) {
    throw std::invalid_argument("area_sum requires a ball-certified series");
  }
  const double x = r * r;
  double acc = 0.0;
  double xn = x;
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    acc += static_cast<double>(n) * norm_sq(coeffs_[n]) * xn;
    xn *= x;
  }
  // sum_{n >= J} n x^n = x^J (J - (J-1) x) / (1-x)^2 with J = T+1.
  const double big_j = static_cast<double>(coeffs_.size());
  const double tail = std::pow(x, big_j) * (big_j - (big_j - 1.0) * x) /
                      ((1.0 - x) * (1.0 - x));
  return {acc, tail};
}

CertifiedReal TruncatedSeries::refined_tail(double r, std::size_t big_n) const {
  check_radius(r);
  if (big_n < 1) {
    throw std::invalid_argument("tail index must be at least 1");
  }
  if (!ball_certified_) {
    throw std::invalid_argument("refined_tail requires a ball-certified series");
  }
  const std::size_t t = (big_n - 1) / 2;
  const double a0 = std::abs(coeffs_[0]);
  const double weight = 1.0 / (1.0 + a0) + r / (1.0 - r);

  const CertifiedReal head = majorant_sum(r, big_n);

  double middle = 0.0;
  double middle_err = 0.0;
  if (t >= 1) {
    double sq = 0.0;
    for (std::size_t n = 1; n <= t && n < coeffs_.size(); ++n) {
      sq += norm_sq(coeffs_[n]);
    }
    middle = sq * std::pow(r, static_cast<double>(big_n)) / (1.0 - r);
    if (t >= coeffs_.size()) {
      // coefficients past the truncation order are unknown; bound each of
      // the missing |a_n|^2 by the certified envelope
      const double env = 1.0 - norm_sq(coeffs_[0]);
      middle_err = static_cast<double>(t - coeffs_.size() + 1) * env * env *
                   std::pow(r, static_cast<double>(big_n)) / (1.0 - r);
    }
  }

  const CertifiedReal quad = quadratic_sum(r, t + 1);

  return {head.value + middle + weight * quad.value,
          head.error_bound + middle_err + weight * quad.error_bound};
}

TruncatedSeries blaschke_series(double c, double phase,
                                std::span<const std::complex<double>> zeros,
                                std::size_t order) {
  if (!(c >= 0.0) || c > 1.0) {
    throw std::invalid_argument("modulus scale must lie in [0, 1]");
  }
  for (const auto& zero : zeros) {
    if (std::abs(zero) > 1.0 - 1e-9) {
      throw std::invalid_argument("Blaschke zeros must lie strictly inside the disk");
    }
  }
  if (order == 0) {
    order = TruncatedSeries::default_truncation_order();
  }
  std::vector<std::complex<double>> s(order + 1, {0.0, 0.0});
  s[0] = std::polar(c, phase);
  for (const auto& alpha : zeros) {
    // multiply by (z - alpha)
    for (std::size_t i = order; i >= 1; --i) {
      s[i] = s[i - 1] - alpha * s[i];
    }
    s[0] = -alpha * s[0];
    // divide by (1 - conj(alpha) z): forward recurrence
    const std::complex<double> ac = std::conj(alpha);
    for (std::size_t i = 1; i <= order; ++i) {
      s[i] += ac * s[i - 1];
    }
  }
  return TruncatedSeries(std::move(s), true);
}

TruncatedSeries sample_unit_ball(std::uint64_t seed, std::size_t blaschke_degree,
                                 std::size_t order) {
  if (blaschke_degree > 16) {
    throw std::invalid_argument("Blaschke degree too large for sampling");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double c = unit(rng);
  const double phase = 2.0 * M_PI * unit(rng);
  std::vector<std::complex<double>> zeros;
  zeros.reserve(blaschke_degree);
  for (std::size_t j = 0; j < blaschke_degree; ++j) {
    // uniform over the disk |alpha| <= 0.8 keeps the expansions well
    // conditioned away from the boundary
    const double rho = 0.8 * std::sqrt(unit(rng));
    const double theta = 2.0 * M_PI * unit(rng);
    zeros.push_back(std::polar(rho, theta));
  }
  return blaschke_series(c, phase, zeros, order);
}

}  // namespace bohrlab
