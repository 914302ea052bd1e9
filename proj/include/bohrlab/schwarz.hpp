#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace bohrlab {

/// A Schwarz function of vanishing order m: analytic on the unit disk,
/// |w(z)| <= 1, w and its first m-1 derivatives vanish at 0, w^(m)(0) != 0.
/// The classical Schwarz lemma then gives |w(z)| <= |z|^m, the only property
/// the inequality bounds consume; the monomial z^m attains it on the positive
/// real axis, which is what drives every sharpness example.
class SchwarzFn {
 public:
  enum class Kind { Monomial, ScaledMonomial, MonomialTimesBlaschke };

  static SchwarzFn monomial(int order);
  /// c * z^m with 0 < |c| <= 1.
  static SchwarzFn scaled_monomial(int order, std::complex<double> scale);
  /// z^m * e^(i*phase) * prod_j (z - zeros[j])/(1 - conj(zeros[j]) z) with
  /// 0 < |zero| < 1 (a zero at the origin would raise the vanishing order).
  static SchwarzFn monomial_times_blaschke(int order,
                                           std::vector<std::complex<double>> zeros,
                                           double phase);

  int order() const { return order_; }
  Kind kind() const { return kind_; }

  /// Function value; throws std::domain_error for |z| >= 1.
  std::complex<double> eval(std::complex<double> z) const;

  /// r^m, the sharp uniform bound for |w(z)| on |z| = r.
  double modulus_envelope(double r) const;

  /// Checks |w(z)| <= |z|^m + 1e-10 on a radial-angular grid of roughly
  /// grid_size points with |z| <= 0.99.
  bool verify_membership(std::size_t grid_size) const;

 private:
  SchwarzFn(Kind kind, int order) : kind_(kind), order_(order) {}

  Kind kind_;
  int order_;
  std::complex<double> scale_{1.0, 0.0};
  std::vector<std::complex<double>> zeros_;
  double phase_ = 0.0;
};

/// Grid check of the order-m Schwarz envelope for an arbitrary callable;
/// the member verify_membership delegates here.
bool verify_envelope(const std::function<std::complex<double>(std::complex<double>)>& fn,
                     int order, std::size_t grid_size);

}  // namespace bohrlab
