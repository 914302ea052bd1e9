#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bohrlab/certified.hpp"

namespace bohrlab {

/// Truncated Taylor expansion a0..aT of an analytic function on the unit
/// disk. When ball_certified is set, the represented (untruncated) function
/// has supremum modulus at most 1; the stored coefficients then satisfy
/// |a0| <= 1 and |an| <= 1 - |a0|^2 (up to 1e-12 slack), and every summation
/// operation returns an analytic bound for the discarded tail alongside the
/// computed value.
class TruncatedSeries {
 public:
  /// Validates the certification invariants; throws std::invalid_argument on
  /// violation or when fewer than two coefficients are supplied.
  TruncatedSeries(std::vector<std::complex<double>> coeffs, bool ball_certified);

  /// Default T: the BOHR_LAB_TRUNC environment variable when set (min 8),
  /// otherwise 512.
  static std::size_t default_truncation_order();

  /// Smallest order >= default such that r^(T+1)/(1-r) <= tol.
  static std::size_t order_for(double r, double tol = 1e-12);

  static TruncatedSeries constant(std::complex<double> c, std::size_t order = 0);
  static TruncatedSeries identity(std::size_t order = 0);

  /// Expansion of (a+z)/(1+az): A0 = a, An = (1-a^2)(-a)^(n-1). Requires
  /// 0 <= a < 1.
  static TruncatedSeries moebius_plus(double a, std::size_t order = 0);

  /// Expansion of (a-z)/(1-az): A0 = a, An = -(1-a^2)a^(n-1). Requires
  /// 0 <= a < 1.
  static TruncatedSeries moebius_minus(double a, std::size_t order = 0);

  std::size_t truncation_order() const { return coeffs_.size() - 1; }
  bool ball_certified() const { return ball_certified_; }

  /// a_n for n <= T, zero beyond the stored range.
  std::complex<double> coeff(std::size_t n) const;
  std::span<const std::complex<double>> coeffs() const { return coeffs_; }

  /// Certified f(w) for |w| <= 1 - 1e-6; error bound |w|^(T+1)/(1-|w|).
  CertifiedComplex eval(std::complex<double> w) const;

  /// Certified f^(n)(w)/n! for n >= 1. Throws when n exceeds the truncation
  /// order (the stored coefficients cannot see the derivative).
  CertifiedComplex deriv_over_factorial(std::size_t n, std::complex<double> w) const;

  /// sum_{n>=n_start} |a_n| r^n, tail bounded by r^(max(T+1,n_start))/(1-r).
  CertifiedReal majorant_sum(double r, std::size_t n_start = 0) const;

  /// sum_{n>=n_start} |a_n|^2 r^(2n), tail bounded geometrically in r^2.
  CertifiedReal quadratic_sum(double r, std::size_t n_start = 1) const;

  /// sum_{n>=1} n |a_n|^2 r^(2n) (normalized area integral of the image of
  /// the disk of radius r).
  CertifiedReal area_sum(double r) const;

  /// The refined tail combination, with t = floor((N-1)/2):
  ///   sum_{n>=N} |a_n| r^n
  ///   + sgn(t) sum_{n=1}^{t} |a_n|^2 r^N/(1-r)
  ///   + (1/(1+|a0|) + r/(1-r)) sum_{n>=t+1} |a_n|^2 r^(2n).
  /// For any ball-certified series this is at most (1-|a0|^2) r^N/(1-r).
  CertifiedReal refined_tail(double r, std::size_t big_n) const;

 private:
  std::vector<std::complex<double>> coeffs_;
  bool ball_certified_;
};

/// Expansion of c * e^(i*phase) * prod_j (z - zeros[j])/(1 - conj(zeros[j]) z).
/// Finite Blaschke products have supremum modulus exactly 1, so the result is
/// ball-certified for c in [0,1]. Zeros must satisfy |zero| <= 1 - 1e-9.
TruncatedSeries blaschke_series(double c, double phase,
                                std::span<const std::complex<double>> zeros,
                                std::size_t order = 0);

/// Pseudorandom member of the unit ball: a scaled, rotated Blaschke product
/// with blaschke_degree zeros drawn uniformly from |alpha| <= 0.8.
TruncatedSeries sample_unit_ball(std::uint64_t seed, std::size_t blaschke_degree,
                                 std::size_t order = 0);

}  // namespace bohrlab
