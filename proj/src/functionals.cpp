#include "bohrlab/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace bohrlab {

namespace {

constexpr double kEvalMargin = 1e-6;
constexpr double kDerivTermCutoff = 1e-14;

void check_input(const FunctionalInput& in) {
  if (!(in.r > 0.0) || in.r > 1.0 - kEvalMargin) {
    throw std::domain_error("functional radius must lie in (0, 1 - 1e-6]");
  }
  if (std::abs(std::abs(in.z) - in.r) > 1e-9) {
    throw std::invalid_argument("evaluation point must satisfy |z| = r");
  }
}

double ipow(double r, int e) { return std::pow(r, static_cast<double>(e)); }

double a0_weight(const TruncatedSeries& f, double u) {
  return 1.0 / (1.0 + std::abs(f.coeff(0))) + u / (1.0 - u);
}

// |f(w)|^2 with the error of the square propagated from the modulus error.
CertifiedReal modulus_squared(const CertifiedComplex& fw) {
  const double mag = std::abs(fw.value);
  return {mag * mag, 2.0 * mag * fw.error_bound + fw.error_bound * fw.error_bound};
}

// sum over n >= n_begin of |f^(n)(w)/n!| u^n where w = omega_m(z) and
// u = |omega_k(z)|. Infinite version (n_end == 0) truncates at the first n
// where the proof's own geometric majorant x^n/(1+r^m), x = r^k/(1-r^m),
// drops below 1e-14 and certifies the rest with the closed geometric tail.
CertifiedReal derivative_series(const FunctionalInput& in, std::size_t n_begin,
                                std::size_t n_end) {
  const double rm = ipow(in.r, in.omega_m.order());
  const double rk = ipow(in.r, in.omega_k.order());
  const std::complex<double> w = in.omega_m.eval(in.z);
  const double u = std::abs(in.omega_k.eval(in.z));

  const bool infinite = n_end == 0;
  if (infinite && rk + rm >= 1.0) {
    throw std::domain_error(
        "derivative series requires r^k + r^m < 1 for the requested orders");
  }
  const double x = rk / (1.0 - rm);
  const std::size_t order = in.f.truncation_order();

  double acc = 0.0;
  double err = 0.0;
  double un = std::pow(u, static_cast<double>(n_begin));
  double xn = std::pow(x, static_cast<double>(n_begin));
  for (std::size_t n = n_begin;; ++n) {
    const CertifiedComplex dn = in.f.deriv_over_factorial(n, w);
    acc += std::abs(dn.value) * un;
    err += dn.error_bound * un;
    if (!infinite && n == n_end) {
      break;
    }
    if (infinite && (xn / (1.0 + rm) < kDerivTermCutoff || n == order)) {
      // terms beyond n are bounded by x^j/(1+r^m), j > n
      err += xn * x / ((1.0 + rm) * (1.0 - x));
      break;
    }
    un *= u;
    xn *= x;
  }
  return {acc, err};
}

}  // namespace

CertifiedReal lhs_th1(const FunctionalInput& in) {
  check_input(in);
  const std::complex<double> w = in.omega_m.eval(in.z);
  const CertifiedComplex fw = in.f.eval(w);
  const CertifiedComplex fprime = in.f.deriv_over_factorial(1, w);
  const double up = std::abs(in.omega_p.eval(in.z));
  const double uk = std::abs(in.omega_k.eval(in.z));
  const CertifiedReal maj = in.f.majorant_sum(uk, 2);
  const CertifiedReal quad = in.f.quadratic_sum(uk, 1);
  const double weight = a0_weight(in.f, uk);
  return {std::abs(fw.value) + up * std::abs(fprime.value) + maj.value +
              weight * quad.value,
          fw.error_bound + up * fprime.error_bound + maj.error_bound +
              weight * quad.error_bound};
}

CertifiedReal lhs_th2(const FunctionalInput& in) {
  check_input(in);
  const std::complex<double> w = in.omega_m.eval(in.z);
  const CertifiedReal fw2 = modulus_squared(in.f.eval(w));
  const CertifiedComplex fprime = in.f.deriv_over_factorial(1, w);
  const double up = std::abs(in.omega_p.eval(in.z));
  const double uk = std::abs(in.omega_k.eval(in.z));
  const CertifiedReal maj = in.f.majorant_sum(uk, 2);
  const CertifiedReal quad = in.f.quadratic_sum(uk, 1);
  const double weight = a0_weight(in.f, uk);
  return {fw2.value + up * std::abs(fprime.value) + maj.value + weight * quad.value,
          fw2.error_bound + up * fprime.error_bound + maj.error_bound +
              weight * quad.error_bound};
}

CertifiedReal lhs_th6(const FunctionalInput& in, double lambda) {
  check_input(in);
  if (!(lambda >= 0.0)) {
    throw std::invalid_argument("lambda must be nonnegative");
  }
  const double uk = std::abs(in.omega_k.eval(in.z));
  const double vm = std::abs(in.omega_m.eval(in.z));
  const CertifiedReal maj = in.f.majorant_sum(uk, 0);
  const CertifiedReal quad = in.f.quadratic_sum(uk, 1);
  const CertifiedReal area = in.f.area_sum(vm);
  const double weight = a0_weight(in.f, uk);
  return {maj.value + weight * quad.value + lambda * area.value,
          maj.error_bound + weight * quad.error_bound + lambda * area.error_bound};
}

CertifiedReal lhs_th3(const FunctionalInput& in) {
  check_input(in);
  const CertifiedComplex fw = in.f.eval(in.omega_m.eval(in.z));
  const CertifiedReal series = derivative_series(in, 2, 0);
  return {std::abs(fw.value) + series.value, fw.error_bound + series.error_bound};
}

CertifiedReal lhs_th5(const FunctionalInput& in, int derivative_count) {
  check_input(in);
  if (derivative_count < 1) {
    throw std::invalid_argument("derivative count must be at least 1");
  }
  const CertifiedComplex fw = in.f.eval(in.omega_m.eval(in.z));
  const CertifiedReal series =
      derivative_series(in, 1, static_cast<std::size_t>(derivative_count));
  return {std::abs(fw.value) + series.value, fw.error_bound + series.error_bound};
}

CertifiedReal lhs_th4(const FunctionalInput& in) {
  check_input(in);
  const CertifiedReal fw2 = modulus_squared(in.f.eval(in.omega_m.eval(in.z)));
  const CertifiedReal series = derivative_series(in, 2, 0);
  return {fw2.value + series.value, fw2.error_bound + series.error_bound};
}

CertifiedReal lhs_thm_a(const TruncatedSeries& f, double r) {
  if (!(r > 0.0) || r > 1.0 - kEvalMargin) {
    throw std::domain_error("radius must lie in (0, 1 - 1e-6]");
  }
  const std::complex<double> z{r, 0.0};
  const CertifiedComplex fz = f.eval(z);
  const CertifiedComplex fprime = f.deriv_over_factorial(1, z);
  const CertifiedReal maj = f.majorant_sum(r, 2);
  const CertifiedReal quad = f.quadratic_sum(r, 1);
  const double weight = a0_weight(f, r);
  return {std::abs(fz.value) + r * std::abs(fprime.value) + maj.value +
              weight * quad.value,
          fz.error_bound + r * fprime.error_bound + maj.error_bound +
              weight * quad.error_bound};
}

CertifiedReal lhs_thm_b(const TruncatedSeries& f, double r) {
  if (!(r > 0.0) || r > 1.0 - kEvalMargin) {
    throw std::domain_error("radius must lie in (0, 1 - 1e-6]");
  }
  const std::complex<double> z{r, 0.0};
  const CertifiedReal fz2 = modulus_squared(f.eval(z));
  const CertifiedComplex fprime = f.deriv_over_factorial(1, z);
  const CertifiedReal maj = f.majorant_sum(r, 2);
  const CertifiedReal quad = f.quadratic_sum(r, 1);
  const double weight = a0_weight(f, r);
  return {fz2.value + r * std::abs(fprime.value) + maj.value + weight * quad.value,
          fz2.error_bound + r * fprime.error_bound + maj.error_bound +
              weight * quad.error_bound};
}

CertifiedReal lhs_thm_c(const TruncatedSeries& f, double r) {
  if (!(r > 0.0) || r > 1.0 - kEvalMargin) {
    throw std::domain_error("radius must lie in (0, 1 - 1e-6]");
  }
  const CertifiedReal maj = f.majorant_sum(r, 0);
  const CertifiedReal quad = f.quadratic_sum(r, 1);
  const CertifiedReal area = f.area_sum(r);
  const double weight = a0_weight(f, r);
  return {maj.value + weight * quad.value + (8.0 / 9.0) * area.value,
          maj.error_bound + weight * quad.error_bound +
              (8.0 / 9.0) * area.error_bound};
}

CertifiedReal bohr_rogosinski_sum(const TruncatedSeries& f, std::complex<double> z,
                                  std::size_t big_n) {
  if (big_n < 1) {
    throw std::invalid_argument("tail index must be at least 1");
  }
  const CertifiedComplex fz = f.eval(z);
  const CertifiedReal maj = f.majorant_sum(std::abs(z), big_n);
  return {std::abs(fz.value) + maj.value, fz.error_bound + maj.error_bound};
}

double rogosinski_partial(const TruncatedSeries& f, std::complex<double> z,
                          std::size_t big_n) {
  if (big_n < 1) {
    throw std::invalid_argument("partial-sum length must be at least 1");
  }
  if (big_n > f.truncation_order() + 1) {
    throw std::invalid_argument("partial sum exceeds the stored coefficients");
  }
  if (std::abs(z) >= 1.0) {
    throw std::domain_error("partial sums are evaluated inside the unit disk");
  }
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t n = big_n; n-- > 0;) {
    acc = acc * z + f.coeff(n);
  }
  return std::abs(acc);
}

}  // namespace bohrlab
