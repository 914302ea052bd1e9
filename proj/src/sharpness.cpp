#include "bohrlab/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bohrlab {

namespace {

double ipow(double r, int e) { return std::pow(r, static_cast<double>(e)); }

bool is_sharpness_family(Family f) {
  switch (f) {
    case Family::th1:
    case Family::th2:
    case Family::th6:
    case Family::th3:
    case Family::th5:
    case Family::th4:
      return true;
    default:
      return false;
  }
}

bool uses_moebius_minus(Family f) {
  return f == Family::th3 || f == Family::th5 || f == Family::th4;
}

void check_gap_args(const RadiusProblem& problem, double a, double r) {
  if (!is_sharpness_family(problem.family)) {
    throw std::invalid_argument("no extremal closed form for this family");
  }
  if (!(a >= 0.0) || a >= 1.0) {
    throw std::invalid_argument("extremal parameter a must lie in [0, 1)");
  }
  if (!(r > 0.0) || r >= 1.0) {
    throw std::domain_error("radius must lie in (0, 1)");
  }
  if (uses_moebius_minus(problem.family)) {
    // the (a-z)/(1-az) forms are derived for z = r with r^m < a and require
    // the geometric ratio a r^k/(1-a r^m) below 1
    if (ipow(r, problem.m) >= a) {
      throw std::domain_error("closed form valid only for r^m < a");
    }
    if (a * (ipow(r, problem.k) + ipow(r, problem.m)) >= 1.0) {
      throw std::domain_error("closed form requires a(r^k + r^m) < 1");
    }
  }
}

}  // namespace

double gap_factor(const RadiusProblem& problem, double a, double r) {
  check_gap_args(problem, a, r);
  const int m = problem.m;
  const int p = problem.p;
  const int k = problem.k;
  const double rm = ipow(r, m);
  const double rk = ipow(r, k);

  switch (problem.family) {
    case Family::th1: {
      const double d = 1.0 + a * rm;
      return (1.0 + a) * ipow(r, p) / (d * d) +
             (1.0 + a) * a * rk * rk / (1.0 - a * rk) +
             (1.0 - a * a) * rk * rk / ((1.0 - a * rk) * (1.0 - rk)) -
             (1.0 - rm) / d;
    }
    case Family::th2: {
      const double d = 1.0 + a * rm;
      return -(1.0 - rm * rm) / (d * d) + ipow(r, p) / (d * d) +
             a * rk * rk / (1.0 - a * rk) +
             (1.0 + a * rk) * (1.0 - a * a) * rk * rk /
                 ((1.0 + a) * (1.0 - rk) * (1.0 - a * a * rk * rk));
    }
    case Family::th6: {
      const double lambda = lambda_coeff(m, k);
      const double d2 = 1.0 - a * a * rm * rm;
      return (1.0 + a) * rk / (1.0 - a * rk) +
             (1.0 - a * a) * rk * rk / ((1.0 - rk) * (1.0 - a * rk)) +
             (1.0 - a * a) * (1.0 + a) * lambda * rm * rm / (d2 * d2) - 1.0;
    }
    case Family::th3: {
      return -(1.0 + rm) +
             a * (1.0 + a) * rk * rk / ((1.0 - a * rm) * (1.0 - a * rk - a * rm));
    }
    case Family::th5: {
      const int big_n = problem.n;
      if (big_n < 1) {
        throw std::invalid_argument("derivative count must be at least 1");
      }
      const double base = 1.0 - a * rm;
      const double base_n = std::pow(base, static_cast<double>(big_n));
      const double an = std::pow(a, static_cast<double>(big_n));
      return -(1.0 + rm) +
             (1.0 + a) * (rk * base_n - an * std::pow(rk, static_cast<double>(big_n)) * rk) /
                 (base_n * (1.0 - a * rk - a * rm));
    }
    case Family::th4: {
      // the leading term is -(1-r^{2m}), from
      // ((a-r^m)/(1-ar^m))^2 = 1 - (1-a^2)(1-r^{2m})/(1-ar^m)^2;
      // with it the a->1 limit vanishes exactly at the th4 radius
      return -(1.0 - rm * rm) + a * rk * rk / (1.0 - a * rk - a * rm);
    }
    default:
      break;
  }
  throw std::invalid_argument("no extremal closed form for this family");
}

double closed_gap(const RadiusProblem& problem, double a, double r) {
  const double factor = gap_factor(problem, a, r);
  const double rm = ipow(r, problem.m);
  switch (problem.family) {
    case Family::th1:
      return (1.0 - a) * factor;
    case Family::th2:
      return (1.0 - a * a) * factor;
    case Family::th6:
      return (1.0 - a) * factor;
    case Family::th3:
    case Family::th5:
      return (1.0 - a) * factor / (1.0 - a * rm);
    case Family::th4: {
      const double d = 1.0 - a * rm;
      return (1.0 - a * a) * factor / (d * d);
    }
    default:
      break;
  }
  throw std::invalid_argument("no extremal closed form for this family");
}

double limit_gap(const RadiusProblem& problem, double r) {
  if (!is_sharpness_family(problem.family)) {
    throw std::invalid_argument("no extremal closed form for this family");
  }
  if (!(r > 0.0) || r >= 1.0) {
    throw std::domain_error("radius must lie in (0, 1)");
  }
  const int m = problem.m;
  const int p = problem.p;
  const int k = problem.k;
  const double rm = ipow(r, m);
  const double rk = ipow(r, k);
  if (uses_moebius_minus(problem.family) && rk + rm >= 1.0) {
    throw std::domain_error("limit valid only for r^k + r^m < 1");
  }

  switch (problem.family) {
    case Family::th1: {
      const double d = 1.0 + rm;
      return 2.0 * ipow(r, p) / (d * d) + 2.0 * rk * rk / (1.0 - rk) -
             (1.0 - rm) / d;
    }
    case Family::th2: {
      const double d = 1.0 + rm;
      return (rm * rm + ipow(r, p) - 1.0) / (d * d) + rk * rk / (1.0 - rk);
    }
    case Family::th6:
      return 2.0 * rk / (1.0 - rk) - 1.0;
    case Family::th3:
      return -(1.0 + rm) + 2.0 * rk * rk / ((1.0 - rm) * (1.0 - rk - rm));
    case Family::th5: {
      const int big_n = problem.n;
      if (big_n < 1) {
        throw std::invalid_argument("derivative count must be at least 1");
      }
      const double base_n = std::pow(1.0 - rm, static_cast<double>(big_n));
      const double inner =
          (2.0 * rk * base_n -
           2.0 * std::pow(rk, static_cast<double>(big_n)) * rk) /
              ((base_n / (1.0 - rm)) * (1.0 - rk - rm) * (1.0 + rm)) -
          (1.0 - rm);
      return (1.0 + rm) / (1.0 - rm) * inner;
    }
    case Family::th4:
      return -(1.0 - rm * rm) + rk * rk / (1.0 - rk - rm);
    default:
      break;
  }
  throw std::invalid_argument("no extremal closed form for this family");
}

double sharpness_ceiling(const RadiusProblem& problem, double a) {
  if (!is_sharpness_family(problem.family)) {
    throw std::invalid_argument("no extremal closed form for this family");
  }
  if (!(a > 0.0) || a >= 1.0) {
    throw std::invalid_argument("extremal parameter a must lie in (0, 1)");
  }
  switch (problem.family) {
    case Family::th1: {
      RadiusProblem aux = problem;
      aux.family = Family::aux_rmp;
      return smallest_positive_root(aux).radius;
    }
    case Family::th2: {
      RadiusProblem aux = problem;
      aux.family = Family::aux_r2mp;
      return smallest_positive_root(aux).radius;
    }
    case Family::th6:
      return 1.0;
    case Family::th3:
    case Family::th5:
    case Family::th4: {
      const double root_a = std::pow(a, 1.0 / static_cast<double>(problem.m));
      // where a(r^k + r^m) reaches 1, if it does inside the disk
      double conv = 1.0;
      if (a * 2.0 > 1.0) {
        double lo = 0.0;
        double hi = 1.0;
        for (int i = 0; i < 200; ++i) {
          const double mid = 0.5 * (lo + hi);
          (a * (ipow(mid, problem.k) + ipow(mid, problem.m)) < 1.0 ? lo : hi) = mid;
        }
        conv = 0.5 * (lo + hi);
      }
      return std::min(root_a, conv);
    }
    default:
      break;
  }
  throw std::invalid_argument("no extremal closed form for this family");
}

std::pair<SweepRecord, SweepRecord> sharpness_sweep(const RadiusProblem& problem,
                                                    double a, double delta) {
  if (!(a >= 1.0 - 1e-3) || a >= 1.0) {
    throw std::invalid_argument("sharpness sweeps need a within 1e-3 of 1");
  }
  if (!(delta > 0.0)) {
    throw std::invalid_argument("delta must be positive");
  }
  double radius = 0.0;
  if (problem.family == Family::th6) {
    radius = rk_closed_form(problem.k);
  } else {
    radius = smallest_positive_root(problem).radius;
  }

  const double r_minus = radius - delta;
  if (!(r_minus > 0.0)) {
    throw std::invalid_argument("delta larger than the radius");
  }
  const double ceiling = sharpness_ceiling(problem, a);
  const double r_plus = std::min(radius + delta, ceiling - 1e-9);
  if (!(r_plus > radius)) {
    throw std::invalid_argument(
        "validity region too tight to sample above the radius");
  }

  auto record = [&](double r) {
    SweepRecord rec;
    rec.family = problem.family;
    rec.m = problem.m;
    rec.p = problem.p;
    rec.k = problem.k;
    rec.n = problem.n;
    rec.a = a;
    rec.r = r;
    rec.gap = closed_gap(problem, a, r);
    rec.lhs = 1.0 + rec.gap;
    rec.at_root = false;
    return rec;
  };
  return {record(r_minus), record(r_plus)};
}

std::vector<SweepRecord> figure_sweep(const RadiusProblem& problem, double r_start,
                                      double r_end, double step) {
  if (!(step > 0.0) || !(r_end > r_start)) {
    throw std::invalid_argument("sweep range must be nonempty with positive step");
  }
  const double ceiling = domain_ceiling(problem);
  const double lo = std::max(r_start, 1e-6);
  const double hi = std::min(r_end, ceiling - 1e-9);
  if (!(hi > lo)) {
    throw std::domain_error("sweep range lies outside the family's domain");
  }

  double root = -1.0;
  try {
    root = smallest_positive_root(problem).radius;
  } catch (const NoRootError&) {
    // sweep still useful without a marked root
  }

  auto record = [&](double r, bool at_root) {
    SweepRecord rec;
    rec.family = problem.family;
    rec.m = problem.m;
    rec.p = problem.p;
    rec.k = problem.k;
    rec.n = problem.n;
    rec.a = 1.0;
    rec.r = r;
    rec.gap = residual(problem, r);
    rec.lhs = 1.0 + rec.gap;
    rec.at_root = at_root;
    return rec;
  };

  std::vector<SweepRecord> rows;
  bool root_emitted = false;
  for (double r = lo; r <= hi + 0.5 * step; r += step) {
    const double rr = std::min(r, hi);
    if (root > 0.0 && !root_emitted && root >= lo && root <= hi && root < rr) {
      rows.push_back(record(root, true));
      root_emitted = true;
    }
    rows.push_back(record(rr, false));
    if (rr >= hi) {
      break;
    }
  }
  if (root > 0.0 && !root_emitted && root >= lo && root <= hi) {
    rows.push_back(record(root, true));
  }
  return rows;
}

}  // namespace bohrlab
