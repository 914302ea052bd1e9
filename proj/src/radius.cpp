#include "bohrlab/radius.hpp"

#include <algorithm>
#include <cmath>

namespace bohrlab {

namespace {

double ipow(double r, int e) { return std::pow(r, static_cast<double>(e)); }

void require_positive(int value, const char* name) {
  if (value < 1) {
    throw std::invalid_argument(std::string(name) + " must be a positive integer");
  }
}

void validate(const RadiusProblem& problem) {
  switch (problem.family) {
    case Family::th1:
    case Family::th2:
      require_positive(problem.m, "m");
      require_positive(problem.p, "p");
      require_positive(problem.k, "k");
      break;
    case Family::th6:
    case Family::aux_rk:
      require_positive(problem.k, "k");
      break;
    case Family::th3:
    case Family::th4:
      require_positive(problem.m, "m");
      require_positive(problem.k, "k");
      break;
    case Family::th5:
      require_positive(problem.m, "m");
      require_positive(problem.k, "k");
      require_positive(problem.n, "N");
      break;
    case Family::aux_rmp:
    case Family::aux_r2mp:
      require_positive(problem.m, "m");
      require_positive(problem.p, "p");
      break;
    case Family::thmb_quartic:
      break;
  }
}

bool uses_km_ceiling(Family family) {
  return family == Family::th3 || family == Family::th5 || family == Family::th4;
}

// Root of r^k + r^m = 1 in (0,1); the function is strictly increasing.
double km_ceiling(int m, int k) {
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (ipow(mid, k) + ipow(mid, m) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::th1: return "th1";
    case Family::th2: return "th2";
    case Family::th6: return "th6";
    case Family::th3: return "th3";
    case Family::th5: return "th5";
    case Family::th4: return "th4";
    case Family::aux_rmp: return "aux-rmp";
    case Family::aux_r2mp: return "aux-r2mp";
    case Family::aux_rk: return "aux-rk";
    case Family::thmb_quartic: return "thmb-quartic";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  static const std::pair<const char*, Family> table[] = {
      {"th1", Family::th1},           {"th2", Family::th2},
      {"th6", Family::th6},           {"th3", Family::th3},
      {"th5", Family::th5},           {"th4", Family::th4},
      {"aux-rmp", Family::aux_rmp},   {"aux-r2mp", Family::aux_r2mp},
      {"aux-rk", Family::aux_rk},     {"thmb-quartic", Family::thmb_quartic},
  };
  for (const auto& [key, value] : table) {
    if (name == key) {
      return value;
    }
  }
  throw std::invalid_argument("unknown theorem family: " + name);
}

double domain_ceiling(const RadiusProblem& problem) {
  validate(problem);
  if (uses_km_ceiling(problem.family)) {
    return km_ceiling(problem.m, problem.k);
  }
  return 1.0;
}

double residual(const RadiusProblem& problem, double r) {
  validate(problem);
  if (!(r > 0.0) || r >= 1.0) {
    throw std::domain_error("radius must lie in (0, 1)");
  }
  const int m = problem.m;
  const int p = problem.p;
  const int k = problem.k;
  if (uses_km_ceiling(problem.family) && ipow(r, k) + ipow(r, m) >= 1.0) {
    throw std::domain_error("radius outside the family's domain (r^k + r^m >= 1)");
  }

  switch (problem.family) {
    case Family::th1: {
      const double rm = ipow(r, m);
      const double rk = ipow(r, k);
      return 2.0 * ipow(r, p) / (1.0 + rm) + 2.0 * rk * rk * (1.0 + rm) / (1.0 - rk) -
             (1.0 - rm);
    }
    case Family::th2: {
      const double rm = ipow(r, m);
      const double rk = ipow(r, k);
      return rk * rk / (1.0 - rk) -
             (1.0 - rm * rm - ipow(r, p)) / ((1.0 + rm) * (1.0 + rm));
    }
    case Family::th6:
    case Family::aux_rk:
      return 3.0 * ipow(r, k) - 1.0;
    case Family::th3: {
      const double rm = ipow(r, m);
      const double rk = ipow(r, k);
      return 2.0 * rk * rk - (1.0 - rm * rm) * (1.0 - rk - rm);
    }
    case Family::th5: {
      // The quotient form is 0/0 at the ceiling; with x = r^k/(1-r^m) the
      // factor (1 - r^k - r^m) cancels and the residual is
      //   (2 r^k / (1+r^m)) * sum_{j=0}^{N-1} x^j - (1 - r^m).
      const double rm = ipow(r, m);
      const double rk = ipow(r, k);
      const double x = rk / (1.0 - rm);
      double geom = 0.0;
      double xj = 1.0;
      for (int j = 0; j < problem.n; ++j) {
        geom += xj;
        xj *= x;
      }
      return 2.0 * rk * geom / (1.0 + rm) - (1.0 - rm);
    }
    case Family::th4: {
      const double rm = ipow(r, m);
      const double rk = ipow(r, k);
      return rk * rk - (1.0 - rm * rm) * (1.0 - rk - rm);
    }
    case Family::aux_rmp:
      return ipow(r, 2 * m) + 2.0 * ipow(r, p) - 1.0;
    case Family::aux_r2mp:
      return ipow(r, 2 * m) + ipow(r, p) - 1.0;
    case Family::thmb_quartic:
      return 2.0 * r + r * r + r * r * r + r * r * r * r - 1.0;
  }
  throw std::invalid_argument("unknown family");
}

RadiusResult smallest_positive_root(const RadiusProblem& problem, double tol) {
  validate(problem);
  if (!(tol >= 1e-14)) {
    throw std::invalid_argument("tolerance must be at least 1e-14");
  }
  const double ceiling = domain_ceiling(problem);
  const double hi_limit = ceiling - 1e-9;
  constexpr double kScanStep = 1e-3;

  int iterations = 0;
  double lo = 1e-6;
  double f_lo = residual(problem, lo);
  ++iterations;
  if (f_lo >= 0.0) {
    throw NoRootError("residual not negative at the left end of the domain");
  }

  double hi = lo;
  double f_hi = f_lo;
  bool bracketed = false;
  while (hi < hi_limit) {
    const double next = std::min(hi + kScanStep, hi_limit);
    const double f_next = residual(problem, next);
    ++iterations;
    if (f_next >= 0.0) {
      lo = hi;
      f_lo = f_hi;
      hi = next;
      f_hi = f_next;
      bracketed = true;
      break;
    }
    hi = next;
    f_hi = f_next;
  }
  if (!bracketed) {
    throw NoRootError(std::string("no sign change of the ") +
                      family_name(problem.family) + " residual inside its domain");
  }

  const double target = std::min(tol, 1e-12);
  while (hi - lo > target && hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = residual(problem, mid);
    ++iterations;
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  RadiusResult result;
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.radius = 0.5 * (lo + hi);
  result.residual = residual(problem, result.radius);
  result.iterations = iterations;
  return result;
}

double rk_closed_form(int k) {
  require_positive(k, "k");
  return std::pow(3.0, -1.0 / static_cast<double>(k));
}

double lambda_coeff(int m, int k) {
  require_positive(m, "m");
  require_positive(k, "k");
  const double rk2m = std::pow(3.0, -2.0 * static_cast<double>(m) / static_cast<double>(k));
  return (1.0 - rk2m) * (1.0 - rk2m) / (8.0 * rk2m);
}

namespace {

TableRow solved_row(std::string quantity, Family family, int m, int p, int k,
                    double reference) {
  RadiusProblem problem;
  problem.family = family;
  problem.m = m;
  problem.p = p;
  problem.k = k;
  const double value = smallest_positive_root(problem).radius;
  return TableRow{std::move(quantity), m, p, k, value, reference,
                  std::abs(value - reference)};
}

TableRow direct_row(std::string quantity, int m, int k, double value,
                    double reference) {
  return TableRow{std::move(quantity), m, 0, k, value, reference,
                  std::abs(value - reference)};
}

}  // namespace

std::vector<TableRow> make_table(int id) {
  std::vector<TableRow> rows;
  struct Mpk {
    int m, p, k;
  };
  static constexpr Mpk mpk_rows[] = {{1, 1, 1}, {3, 3, 1}, {2, 3, 2}, {5, 30, 10},
                                     {30, 20, 10}};
  switch (id) {
    case 1: {
      static const double ref_r[] = {(std::sqrt(17.0) - 3.0) / 4.0, 0.441112, 0.567006,
                                     0.88777, 0.914967};
      static const double ref_aux[] = {0.414214, 0.745432, 0.716673, 0.948565,
                                       0.961223};
      for (std::size_t i = 0; i < 5; ++i) {
        const auto [m, p, k] = mpk_rows[i];
        rows.push_back(solved_row("R_mpk", Family::th1, m, p, k, ref_r[i]));
        rows.push_back(solved_row("r_mp", Family::aux_rmp, m, p, k, ref_aux[i]));
      }
      return rows;
    }
    case 2: {
      static const double ref_r[] = {0.385795, 0.535687, 0.640675, 0.906065, 0.936066};
      static const double ref_aux[] = {0.618034, 0.8518, 0.819173, 0.962497, 0.981069};
      for (std::size_t i = 0; i < 5; ++i) {
        const auto [m, p, k] = mpk_rows[i];
        rows.push_back(solved_row("R2_mpk", Family::th2, m, p, k, ref_r[i]));
        rows.push_back(solved_row("r2_mp", Family::aux_r2mp, m, p, k, ref_aux[i]));
      }
      return rows;
    }
    case 3: {
      // published closed forms: 1/3 and 800/81; 1/sqrt(3) and 1/6;
      // 1/sqrt(3) and 8/9; 1/cbrt(3) and (3-cbrt(3))^2/(24 cbrt(3));
      // 1/cbrt(3) and (9-3^(2/3))^2/(72*3^(2/3)).
      const double c3 = std::cbrt(3.0);
      const double c3sq = c3 * c3;
      struct MkRef {
        int m, k;
        double rk_ref, lambda_ref;
      };
      const MkRef refs[] = {
          {2, 1, 1.0 / 3.0, 800.0 / 81.0},
          {1, 2, 1.0 / std::sqrt(3.0), 1.0 / 6.0},
          {2, 2, 1.0 / std::sqrt(3.0), 8.0 / 9.0},
          {1, 3, 1.0 / c3, (3.0 - c3) * (3.0 - c3) / (24.0 * c3)},
          {2, 3, 1.0 / c3, (9.0 - c3sq) * (9.0 - c3sq) / (72.0 * c3sq)},
      };
      for (const auto& row : refs) {
        RadiusProblem problem;
        problem.family = Family::aux_rk;
        problem.k = row.k;
        const double solved = smallest_positive_root(problem).radius;
        rows.push_back(direct_row("r_k", row.m, row.k, solved, row.rk_ref));
        rows.push_back(direct_row("lambda", row.m, row.k,
                                  lambda_coeff(row.m, row.k), row.lambda_ref));
      }
      return rows;
    }
    case 4: {
      struct MkRef {
        int m, k;
        double ref;
      };
      static constexpr MkRef refs[] = {{1, 1, 0.355416},  {2, 1, 0.430586},
                                       {2, 2, 0.596168},  {3, 2, 0.633513},
                                       {4, 10, 0.869519}, {10, 15, 0.924302}};
      for (const auto& row : refs) {
        rows.push_back(solved_row("R3_mk", Family::th3, row.m, 1, row.k, row.ref));
        rows.back().p = 0;
      }
      return rows;
    }
    case 5: {
      struct MkRef {
        int m, k;
        double ref;
      };
      static constexpr MkRef refs[] = {{1, 1, 0.403032},  {2, 1, 0.49478},
                                       {2, 2, 0.634848},  {3, 2, 0.676754},
                                       {4, 10, 0.880073}, {10, 15, 0.931868}};
      for (const auto& row : refs) {
        rows.push_back(solved_row("R5_mk", Family::th4, row.m, 1, row.k, row.ref));
        rows.back().p = 0;
      }
      return rows;
    }
    default:
      throw std::invalid_argument("unknown table id (valid: 1, 2, 3, 4, 5)");
  }
}

}  // namespace bohrlab
