#pragma once

#include <complex>

#include "bohrlab/certified.hpp"
#include "bohrlab/schwarz.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab {

/// Everything the inequality left-hand sides consume: a ball-certified
/// series, up to three Schwarz functions (orders m, p, k) and the evaluation
/// point z with |z| = r. All bounds depend on z only through |z|, and every
/// sharpness example sits on the positive real axis, so the default point is
/// z = r.
struct FunctionalInput {
  const TruncatedSeries& f;
  const SchwarzFn& omega_m;
  const SchwarzFn& omega_p;
  const SchwarzFn& omega_k;
  double r;
  std::complex<double> z;

  static FunctionalInput at(const TruncatedSeries& f, const SchwarzFn& omega_m,
                            const SchwarzFn& omega_p, const SchwarzFn& omega_k,
                            double r) {
    return FunctionalInput{f, omega_m, omega_p, omega_k, r, {r, 0.0}};
  }
};

/// |f(w_m(z))| + |w_p(z)||f'(w_m(z))| + sum_{n>=2} |a_n||w_k(z)|^n
///   + (1/(1+|a0|) + u/(1-u)) sum_{n>=1} |a_n|^2 u^(2n),  u = |w_k(z)|.
CertifiedReal lhs_th1(const FunctionalInput& in);

/// Same with the first term squared: |f(w_m(z))|^2 + ...
CertifiedReal lhs_th2(const FunctionalInput& in);

/// sum_{n>=0} |a_n| u^n + (1/(1+|a0|) + u/(1-u)) sum_{n>=1} |a_n|^2 u^(2n)
///   + lambda * sum_{n>=1} n |a_n|^2 v^(2n),  u = |w_k(z)|, v = |w_m(z)|.
CertifiedReal lhs_th6(const FunctionalInput& in, double lambda);

/// |f(w_m(z))| + sum_{n>=2} |f^(n)(w_m(z))/n!| |w_k(z)|^n. Requires
/// r^k + r^m < 1 (geometric convergence of the derivative series).
CertifiedReal lhs_th3(const FunctionalInput& in);

/// |f(w_m(z))| + sum_{n=1}^{N} |f^(n)(w_m(z))/n!| |w_k(z)|^n (finite sum).
CertifiedReal lhs_th5(const FunctionalInput& in, int derivative_count);

/// |f(w_m(z))|^2 + sum_{n>=2} |f^(n)(w_m(z))/n!| |w_k(z)|^n. Requires
/// r^k + r^m < 1.
CertifiedReal lhs_th4(const FunctionalInput& in);

/// The m = p = k = 1, w(z) = z specializations, computed directly.
CertifiedReal lhs_thm_a(const TruncatedSeries& f, double r);
CertifiedReal lhs_thm_b(const TruncatedSeries& f, double r);
CertifiedReal lhs_thm_c(const TruncatedSeries& f, double r);

/// |f(z)| + sum_{n>=N} |a_n| |z|^n.
CertifiedReal bohr_rogosinski_sum(const TruncatedSeries& f, std::complex<double> z,
                                  std::size_t big_n);

/// |sum_{n<N} a_n z^n|, the modulus of the N-term partial sum. Requires
/// N <= T + 1 (the coefficients must all be stored).
double rogosinski_partial(const TruncatedSeries& f, std::complex<double> z,
                          std::size_t big_n);

}  // namespace bohrlab
