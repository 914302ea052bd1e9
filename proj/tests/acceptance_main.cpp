// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bohrlab/functionals.hpp"
#include "bohrlab/radius.hpp"
#include "bohrlab/schwarz.hpp"
#include "bohrlab/series.hpp"
#include "bohrlab/sharpness.hpp"
#include "bohrlab/verify.hpp"

using namespace bohrlab;

namespace {

int g_failures = 0;

void report(int id, const char* label, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id, label,
              detail.c_str());
  if (!ok) {
    ++g_failures;
  }
}

RadiusProblem problem(Family family, int m = 1, int p = 1, int k = 1, int n = 1) {
  RadiusProblem prob;
  prob.family = family;
  prob.m = m;
  prob.p = p;
  prob.k = k;
  prob.n = n;
  return prob;
}

double table_max_diff(int id) {
  double max_diff = 0.0;
  for (const auto& row : make_table(id)) {
    max_diff = std::max(max_diff, row.abs_diff);
  }
  return max_diff;
}

void criterion_1() {
  const double max_diff = table_max_diff(1);
  const double r111 = smallest_positive_root(problem(Family::th1)).radius;
  const double exact = (std::sqrt(17.0) - 3.0) / 4.0;
  const double r11 = smallest_positive_root(problem(Family::aux_rmp)).radius;
  const bool ok = max_diff < 5e-6 && std::abs(r111 - exact) < 1e-10 &&
                  std::abs(r11 - (std::sqrt(2.0) - 1.0)) < 1e-10;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "max |diff| = %.2e, |R111 - (sqrt(17)-3)/4| = %.2e, "
                "|r11 - (sqrt(2)-1)| = %.2e",
                max_diff, std::abs(r111 - exact), std::abs(r11 - (std::sqrt(2.0) - 1.0)));
  report(1, "Table 1 reproduction", ok, detail);
}

void criterion_2() {
  const double max_diff = table_max_diff(2);
  const double r2111 = smallest_positive_root(problem(Family::th2)).radius;
  const double r211 = smallest_positive_root(problem(Family::aux_r2mp)).radius;
  const double quartic = smallest_positive_root(problem(Family::thmb_quartic)).radius;
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  const bool ok = max_diff < 5e-6 && std::abs(r2111 - 0.385795) < 1e-6 &&
                  std::abs(r211 - golden) < 1e-10 && std::abs(r2111 - quartic) < 1e-10;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "max |diff| = %.2e, |R2 - 0.385795| = %.2e, |r2 - golden| = %.2e, "
                "|R2 - quartic| = %.2e",
                max_diff, std::abs(r2111 - 0.385795), std::abs(r211 - golden),
                std::abs(r2111 - quartic));
  report(2, "Table 2 reproduction", ok, detail);
}

void criterion_3() {
  bool ok = true;
  double worst = 0.0;
  for (int k : {1, 2, 3}) {
    const double solved = smallest_positive_root(problem(Family::aux_rk, 1, 1, k)).radius;
    const double closed = rk_closed_form(k);
    worst = std::max(worst, std::abs(solved - closed));
    ok = ok && std::abs(solved - closed) < 1e-11;
    ok = ok && std::abs(3.0 * std::pow(closed, k) - 1.0) < 1e-12;
  }
  double worst_lambda = std::abs(lambda_coeff(2, 1) - 800.0 / 81.0);
  worst_lambda = std::max(worst_lambda, std::abs(lambda_coeff(1, 2) - 1.0 / 6.0));
  worst_lambda = std::max(worst_lambda, std::abs(lambda_coeff(2, 2) - 8.0 / 9.0));
  for (int k = 1; k <= 6; ++k) {
    worst_lambda = std::max(worst_lambda, std::abs(lambda_coeff(k, k) - 8.0 / 9.0));
  }
  ok = ok && worst_lambda < 1e-12;
  char detail[120];
  std::snprintf(detail, sizeof detail, "max |r_k diff| = %.2e, max |lambda diff| = %.2e",
                worst, worst_lambda);
  report(3, "r_k / lambda table", ok, detail);
}

void criterion_4() {
  const double d3 = table_max_diff(4);
  const double d5 = table_max_diff(5);
  char detail[80];
  std::snprintf(detail, sizeof detail, "R3 max |diff| = %.2e, R5 max |diff| = %.2e", d3,
                d5);
  report(4, "R3 and R5 tables", d3 < 5e-6 && d5 < 5e-6, detail);
}

void criterion_5() {
  const double rog = smallest_positive_root(problem(Family::th5, 50, 1, 1, 1)).radius;
  const double bohr = smallest_positive_root(problem(Family::th5, 50, 1, 1, 60)).radius;
  const bool ok = std::abs(rog - 0.5) < 0.01 && std::abs(bohr - 1.0 / 3.0) < 0.01;
  char detail[120];
  std::snprintf(detail, sizeof detail,
                "R4(50,1,N=1) = %.6f (want 1/2), R4(50,1,N=60) = %.6f (want 1/3)", rog,
                bohr);
  report(5, "limit recovery to Rogosinski and Bohr", ok, detail);
}

void criterion_6() {
  // parameter triples (m,p,k), restricted per family; the th5 N reuses the
  // p slot
  const int triples[][3] = {{1, 1, 1}, {3, 3, 1}, {2, 3, 2}};
  struct Run {
    const char* name;
    RadiusProblem prob;
  };
  std::vector<Run> runs;
  for (const auto& t : triples) {
    runs.push_back({"th1", problem(Family::th1, t[0], t[1], t[2])});
    runs.push_back({"th2", problem(Family::th2, t[0], t[1], t[2])});
    runs.push_back({"th6", problem(Family::th6, t[0], 1, t[2])});
    runs.push_back({"th3", problem(Family::th3, t[0], 1, t[2])});
    runs.push_back({"th5", problem(Family::th5, t[0], 1, t[2], t[1])});
    runs.push_back({"th4", problem(Family::th4, t[0], 1, t[2])});
  }
  bool ok = true;
  double worst = 0.0;
  std::string worst_at = "-";
  for (const auto& run : runs) {
    const auto outcome = run_inequality_suite(run.prob, 500, 20240814, 0.01);
    if (outcome.max_lhs > worst) {
      worst = outcome.max_lhs;
      worst_at = std::string(run.name) + "(" + std::to_string(run.prob.m) + "," +
                 std::to_string(run.prob.k) + ")";
    }
    ok = ok && outcome.passed() && outcome.evaluations == 1500;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "18 runs x 500 samples x 3 variants, max lhs+err = %.12f at %s", worst,
                worst_at.c_str());
  report(6, "inequality property suite at 0.99R", ok, detail);
}

const std::vector<RadiusProblem>& all_table_rows() {
  static const std::vector<RadiusProblem> rows = [] {
    std::vector<RadiusProblem> out;
    const int mpk[][3] = {{1, 1, 1}, {3, 3, 1}, {2, 3, 2}, {5, 30, 10}, {30, 20, 10}};
    for (const auto& t : mpk) {
      out.push_back(problem(Family::th1, t[0], t[1], t[2]));
      out.push_back(problem(Family::th2, t[0], t[1], t[2]));
    }
    const int mk6[][2] = {{2, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}};
    for (const auto& t : mk6) {
      out.push_back(problem(Family::th6, t[0], 1, t[1]));
    }
    const int mk[][2] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 10}, {10, 15}};
    for (const auto& t : mk) {
      out.push_back(problem(Family::th3, t[0], 1, t[1]));
      out.push_back(problem(Family::th4, t[0], 1, t[1]));
    }
    return out;
  }();
  return rows;
}

void criterion_7() {
  bool ok = true;
  double min_above = 1e30;
  double max_below = -1e30;
  for (const auto& prob : all_table_rows()) {
    const auto [below, above] = sharpness_sweep(prob, 1.0 - 1e-4, 1e-2);
    min_above = std::min(min_above, above.gap);
    max_below = std::max(max_below, below.gap);
    ok = ok && above.gap > 0.0 && below.gap <= 1e-6;
  }
  char detail[120];
  std::snprintf(detail, sizeof detail, "min gap(R+d) = %.3e, max gap(R-d) = %.3e",
                min_above, max_below);
  report(7, "sharpness above / safety below every radius", ok, detail);
}

void criterion_8() {
  bool ok = true;
  double worst = 0.0;
  const double a_grid[] = {0.0, 0.25, 0.5, 0.75, 0.95};
  int points = 0;
  for (const auto& prob : all_table_rows()) {
    const bool minus_family = prob.family == Family::th3 ||
                              prob.family == Family::th5 ||
                              prob.family == Family::th4;
    const SchwarzFn wm = SchwarzFn::monomial(prob.m);
    const SchwarzFn wp = SchwarzFn::monomial(prob.p);
    const SchwarzFn wk = SchwarzFn::monomial(prob.k);
    for (double a : a_grid) {
      if (minus_family && a == 0.0) {
        continue;  // the closed form's validity region r^m < a is empty
      }
      const double ceiling = sharpness_ceiling(prob, std::max(a, 0.5));
      const auto f = minus_family ? TruncatedSeries::moebius_minus(a)
                                  : TruncatedSeries::moebius_plus(a);
      for (int i = 1; i <= 20; ++i) {
        const double r = ceiling * static_cast<double>(i) / 21.0;
        if (minus_family &&
            (std::pow(r, prob.m) >= a ||
             std::pow(r, prob.k) + std::pow(r, prob.m) >= 1.0)) {
          continue;  // both the closed form and the certified chain must hold
        }
        const auto in = FunctionalInput::at(f, wm, wp, wk, r);
        double lhs = 0.0;
        switch (prob.family) {
          case Family::th1: lhs = lhs_th1(in).value; break;
          case Family::th2: lhs = lhs_th2(in).value; break;
          case Family::th6: lhs = lhs_th6(in, lambda_coeff(prob.m, prob.k)).value; break;
          case Family::th3: lhs = lhs_th3(in).value; break;
          case Family::th5: lhs = lhs_th5(in, prob.n).value; break;
          case Family::th4: lhs = lhs_th4(in).value; break;
          default: break;
        }
        const double diff = std::abs(lhs - (1.0 + closed_gap(prob, a, r)));
        worst = std::max(worst, diff);
        ok = ok && diff <= 1e-8;
        ++points;
      }
    }
  }
  char detail[100];
  std::snprintf(detail, sizeof detail, "%d grid points, max |series - closed| = %.2e",
                points, worst);
  report(8, "dual-path identity on the (a, r) grid", ok, detail);
}

void criterion_9() {
  bool ok = true;
  // Schwarz-Pick on 1000 (function, point) pairs
  double worst_sp = -1e30;
  {
    int pairs = 0;
    for (std::uint64_t seed = 1; pairs < 1000; ++seed) {
      const auto f = sample_unit_ball(seed, seed % 4, 256);
      const double a0 = std::abs(f.coeff(0));
      for (int j = 0; j < 10 && pairs < 1000; ++j, ++pairs) {
        const double rho = 0.9 * (j + 1) / 10.0;
        const std::complex<double> w = std::polar(rho, 0.7 * j + double(seed));
        const auto fw = f.eval(w);
        const double slack = std::abs(fw.value) -
                             (a0 + rho) / (1.0 + a0 * rho) - fw.error_bound;
        worst_sp = std::max(worst_sp, slack);
        ok = ok && slack <= 1e-9;
      }
    }
  }
  // derivative and coefficient bounds on 1000 pairs
  double worst_deriv = -1e30;
  {
    int pairs = 0;
    for (std::uint64_t seed = 101; pairs < 1000; ++seed) {
      const auto f = sample_unit_ball(seed, seed % 4, 256);
      const double a0 = std::abs(f.coeff(0));
      for (std::size_t n = 1; n <= f.truncation_order(); ++n) {
        if (std::abs(f.coeff(n)) > 1.0 - a0 * a0 + 1e-9) {
          ok = false;
        }
      }
      for (int n = 1; n <= 5 && pairs < 1000; ++n, ++pairs) {
        const double rho = 0.8 * (1 + (seed + n) % 8) / 8.0;
        const std::complex<double> w = std::polar(rho, 0.31 * double(n) * double(seed));
        const auto dn = f.deriv_over_factorial(n, w);
        const auto fw = f.eval(w);
        const double f_lo =
            std::max(0.0, std::abs(fw.value) - fw.error_bound);
        const double bound = (1.0 - f_lo * f_lo) /
                             (std::pow(1.0 - rho, n - 1) * (1.0 - rho * rho));
        const double slack = std::abs(dn.value) - dn.error_bound - bound;
        worst_deriv = std::max(worst_deriv, slack);
        ok = ok && slack <= 1e-9;
      }
    }
  }
  // refined tail bound on 1000 (function, N, r) triples
  double worst_tail = -1e30;
  {
    int pairs = 0;
    for (std::uint64_t seed = 501; pairs < 1000; ++seed) {
      const auto f = sample_unit_ball(seed, seed % 4, 512);
      const double a0 = std::abs(f.coeff(0));
      for (std::size_t n = 1; n <= 6 && pairs < 1000; ++n) {
        for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
          if (pairs >= 1000) {
            break;
          }
          const auto tail = f.refined_tail(r, n);
          const double bound = (1.0 - a0 * a0) * std::pow(r, double(n)) / (1.0 - r);
          const double slack = tail.value + tail.error_bound - bound;
          worst_tail = std::max(worst_tail, slack);
          ok = ok && slack <= 1e-9;
          ++pairs;
        }
      }
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "worst slack: schwarz-pick %.2e, derivative %.2e, refined tail %.2e",
                worst_sp, worst_deriv, worst_tail);
  report(9, "lemma oracles on 1000 sampled pairs each", ok, detail);
}

void criterion_10() {
  bool ok = true;
  double worst_bohr = 0.0;
  double worst_rog = 0.0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto f = sample_unit_ball(seed, seed % 4);
    const auto maj = f.majorant_sum(1.0 / 3.0, 0);
    worst_bohr = std::max(worst_bohr, maj.value + maj.error_bound);
    ok = ok && maj.value + maj.error_bound <= 1.0 + 1e-9;
    for (std::size_t n = 1; n <= 8; ++n) {
      const double partial = rogosinski_partial(f, {0.499, 0.0}, n);
      worst_rog = std::max(worst_rog, partial);
      ok = ok && partial < 1.0;
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof detail,
                "max Bohr sum at 1/3 = %.12f, max partial sum at 0.499 = %.12f",
                worst_bohr, worst_rog);
  report(10, "classical Bohr and Rogosinski checks", ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("ACCEPTANCE: all 10 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
