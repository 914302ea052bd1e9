#include "bohrlab.h"

#include <complex>
#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "bohrlab/functionals.hpp"
#include "bohrlab/radius.hpp"
#include "bohrlab/report.hpp"
#include "bohrlab/schwarz.hpp"
#include "bohrlab/series.hpp"
#include "bohrlab/sharpness.hpp"
#include "bohrlab/verify.hpp"

struct bohrlab_series {
  bohrlab::TruncatedSeries impl;
};

struct bohrlab_schwarz {
  bohrlab::SchwarzFn impl;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
bohrlab_status guarded(Fn&& fn) {
  try {
    fn();
    return BOHRLAB_OK;
  } catch (const bohrlab::NoRootError& e) {
    g_last_error = e.what();
    return BOHRLAB_ERR_NO_ROOT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return BOHRLAB_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return BOHRLAB_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BOHRLAB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BOHRLAB_ERR_INTERNAL;
  }
}

void require(bool ok, const char* message) {
  if (!ok) {
    throw std::invalid_argument(message);
  }
}

bohrlab::Family to_family(bohrlab_family family) {
  switch (family) {
    case BOHRLAB_FAMILY_TH1: return bohrlab::Family::th1;
    case BOHRLAB_FAMILY_TH2: return bohrlab::Family::th2;
    case BOHRLAB_FAMILY_TH6: return bohrlab::Family::th6;
    case BOHRLAB_FAMILY_TH3: return bohrlab::Family::th3;
    case BOHRLAB_FAMILY_TH5: return bohrlab::Family::th5;
    case BOHRLAB_FAMILY_TH4: return bohrlab::Family::th4;
    case BOHRLAB_FAMILY_AUX_RMP: return bohrlab::Family::aux_rmp;
    case BOHRLAB_FAMILY_AUX_R2MP: return bohrlab::Family::aux_r2mp;
    case BOHRLAB_FAMILY_AUX_RK: return bohrlab::Family::aux_rk;
    case BOHRLAB_FAMILY_THMB_QUARTIC: return bohrlab::Family::thmb_quartic;
  }
  throw std::invalid_argument("unknown family code");
}

bohrlab::RadiusProblem to_problem(bohrlab_family family, bohrlab_params params) {
  bohrlab::RadiusProblem problem;
  problem.family = to_family(family);
  problem.m = params.m;
  problem.p = params.p;
  problem.k = params.k;
  problem.n = params.n;
  return problem;
}

bohrlab::ReportFormat to_format(bohrlab_format format) {
  switch (format) {
    case BOHRLAB_FORMAT_CSV: return bohrlab::ReportFormat::csv;
    case BOHRLAB_FORMAT_MARKDOWN: return bohrlab::ReportFormat::markdown;
    case BOHRLAB_FORMAT_JSON: return bohrlab::ReportFormat::json;
  }
  throw std::invalid_argument("unknown format code");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bohrlab_certified to_c(const bohrlab::CertifiedReal& v) {
  return bohrlab_certified{v.value, v.error_bound};
}

}  // namespace

extern "C" {

const char* bohrlab_version(void) { return "bohrlab 1.0.0"; }

const char* bohrlab_status_name(bohrlab_status status) {
  switch (status) {
    case BOHRLAB_OK: return "ok";
    case BOHRLAB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BOHRLAB_ERR_DOMAIN: return "domain error";
    case BOHRLAB_ERR_NO_ROOT: return "no root in domain";
    case BOHRLAB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bohrlab_last_error(void) { return g_last_error.c_str(); }

void bohrlab_string_free(char* s) { std::free(s); }

/* --- series ---------------------------------------------------------------- */

bohrlab_status bohrlab_series_moebius_plus(double a, size_t truncation_order,
                                           bohrlab_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new bohrlab_series{bohrlab::TruncatedSeries::moebius_plus(a, truncation_order)};
  });
}

bohrlab_status bohrlab_series_moebius_minus(double a, size_t truncation_order,
                                            bohrlab_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new bohrlab_series{bohrlab::TruncatedSeries::moebius_minus(a, truncation_order)};
  });
}

bohrlab_status bohrlab_series_sample(uint64_t seed, size_t blaschke_degree,
                                     size_t truncation_order, bohrlab_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new bohrlab_series{
        bohrlab::sample_unit_ball(seed, blaschke_degree, truncation_order)};
  });
}

bohrlab_status bohrlab_series_create(const double* coeffs_re_im, size_t count,
                                     int ball_certified, bohrlab_series** out) {
  return guarded([&] {
    require(out != nullptr && coeffs_re_im != nullptr, "null pointer argument");
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      coeffs.emplace_back(coeffs_re_im[2 * i], coeffs_re_im[2 * i + 1]);
    }
    *out = new bohrlab_series{
        bohrlab::TruncatedSeries(std::move(coeffs), ball_certified != 0)};
  });
}

void bohrlab_series_free(bohrlab_series* s) { delete s; }

size_t bohrlab_series_truncation_order(const bohrlab_series* s) {
  return s ? s->impl.truncation_order() : 0;
}

bohrlab_status bohrlab_series_coeff(const bohrlab_series* s, size_t n, double* re,
                                    double* im) {
  return guarded([&] {
    require(s != nullptr && re != nullptr && im != nullptr, "null pointer argument");
    const std::complex<double> c = s->impl.coeff(n);
    *re = c.real();
    *im = c.imag();
  });
}

bohrlab_status bohrlab_series_eval(const bohrlab_series* s, double w_re, double w_im,
                                   double* out_re, double* out_im,
                                   double* out_error_bound) {
  return guarded([&] {
    require(s != nullptr && out_re != nullptr && out_im != nullptr &&
                out_error_bound != nullptr,
            "null pointer argument");
    const auto v = s->impl.eval({w_re, w_im});
    *out_re = v.value.real();
    *out_im = v.value.imag();
    *out_error_bound = v.error_bound;
  });
}

bohrlab_status bohrlab_series_deriv_over_factorial(const bohrlab_series* s, size_t n,
                                                   double w_re, double w_im,
                                                   double* out_re, double* out_im,
                                                   double* out_error_bound) {
  return guarded([&] {
    require(s != nullptr && out_re != nullptr && out_im != nullptr &&
                out_error_bound != nullptr,
            "null pointer argument");
    const auto v = s->impl.deriv_over_factorial(n, {w_re, w_im});
    *out_re = v.value.real();
    *out_im = v.value.imag();
    *out_error_bound = v.error_bound;
  });
}

bohrlab_status bohrlab_series_majorant_sum(const bohrlab_series* s, double r,
                                           size_t n_start, bohrlab_certified* out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null pointer argument");
    *out = to_c(s->impl.majorant_sum(r, n_start));
  });
}

bohrlab_status bohrlab_series_quadratic_sum(const bohrlab_series* s, double r,
                                            size_t n_start, bohrlab_certified* out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null pointer argument");
    *out = to_c(s->impl.quadratic_sum(r, n_start));
  });
}

bohrlab_status bohrlab_series_area_sum(const bohrlab_series* s, double r,
                                       bohrlab_certified* out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null pointer argument");
    *out = to_c(s->impl.area_sum(r));
  });
}

bohrlab_status bohrlab_series_refined_tail(const bohrlab_series* s, double r,
                                           size_t big_n, bohrlab_certified* out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null pointer argument");
    *out = to_c(s->impl.refined_tail(r, big_n));
  });
}

/* --- Schwarz functions ------------------------------------------------------ */

bohrlab_status bohrlab_schwarz_monomial(int order, bohrlab_schwarz** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new bohrlab_schwarz{bohrlab::SchwarzFn::monomial(order)};
  });
}

bohrlab_status bohrlab_schwarz_scaled_monomial(int order, double scale_re,
                                               double scale_im, bohrlab_schwarz** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new bohrlab_schwarz{
        bohrlab::SchwarzFn::scaled_monomial(order, {scale_re, scale_im})};
  });
}

bohrlab_status bohrlab_schwarz_monomial_times_blaschke(int order,
                                                       const double* zeros_re_im,
                                                       size_t n_zeros, double phase,
                                                       bohrlab_schwarz** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(zeros_re_im != nullptr || n_zeros == 0, "null zeros with nonzero count");
    std::vector<std::complex<double>> zeros;
    zeros.reserve(n_zeros);
    for (size_t i = 0; i < n_zeros; ++i) {
      zeros.emplace_back(zeros_re_im[2 * i], zeros_re_im[2 * i + 1]);
    }
    *out = new bohrlab_schwarz{
        bohrlab::SchwarzFn::monomial_times_blaschke(order, std::move(zeros), phase)};
  });
}

void bohrlab_schwarz_free(bohrlab_schwarz* w) { delete w; }

bohrlab_status bohrlab_schwarz_eval(const bohrlab_schwarz* w, double z_re, double z_im,
                                    double* out_re, double* out_im) {
  return guarded([&] {
    require(w != nullptr && out_re != nullptr && out_im != nullptr,
            "null pointer argument");
    const std::complex<double> v = w->impl.eval({z_re, z_im});
    *out_re = v.real();
    *out_im = v.imag();
  });
}

bohrlab_status bohrlab_schwarz_envelope(const bohrlab_schwarz* w, double r,
                                        double* out) {
  return guarded([&] {
    require(w != nullptr && out != nullptr, "null pointer argument");
    *out = w->impl.modulus_envelope(r);
  });
}

bohrlab_status bohrlab_schwarz_verify(const bohrlab_schwarz* w, size_t grid_size,
                                      int* out_ok) {
  return guarded([&] {
    require(w != nullptr && out_ok != nullptr, "null pointer argument");
    *out_ok = w->impl.verify_membership(grid_size) ? 1 : 0;
  });
}

/* --- functionals ------------------------------------------------------------ */

bohrlab_status bohrlab_lhs(bohrlab_family family, const bohrlab_series* f,
                           const bohrlab_schwarz* omega_m,
                           const bohrlab_schwarz* omega_p,
                           const bohrlab_schwarz* omega_k, double r, double lambda,
                           int derivative_count, bohrlab_certified* out) {
  return guarded([&] {
    require(f != nullptr && omega_m != nullptr && omega_k != nullptr && out != nullptr,
            "null pointer argument");
    const bohrlab::Family fam = to_family(family);
    const bool needs_p = fam == bohrlab::Family::th1 || fam == bohrlab::Family::th2;
    require(!needs_p || omega_p != nullptr, "omega_p required for this family");
    const bohrlab::SchwarzFn& wp = omega_p ? omega_p->impl : omega_m->impl;
    const auto in =
        bohrlab::FunctionalInput::at(f->impl, omega_m->impl, wp, omega_k->impl, r);
    switch (fam) {
      case bohrlab::Family::th1:
        *out = to_c(bohrlab::lhs_th1(in));
        return;
      case bohrlab::Family::th2:
        *out = to_c(bohrlab::lhs_th2(in));
        return;
      case bohrlab::Family::th6: {
        const double lam = lambda < 0.0 ? bohrlab::lambda_coeff(omega_m->impl.order(),
                                                                omega_k->impl.order())
                                        : lambda;
        *out = to_c(bohrlab::lhs_th6(in, lam));
        return;
      }
      case bohrlab::Family::th3:
        *out = to_c(bohrlab::lhs_th3(in));
        return;
      case bohrlab::Family::th5:
        *out = to_c(bohrlab::lhs_th5(in, derivative_count));
        return;
      case bohrlab::Family::th4:
        *out = to_c(bohrlab::lhs_th4(in));
        return;
      default:
        throw std::invalid_argument("family has no inequality functional");
    }
  });
}

bohrlab_status bohrlab_bohr_rogosinski_sum(const bohrlab_series* f, double z_re,
                                           double z_im, size_t big_n,
                                           bohrlab_certified* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null pointer argument");
    *out = to_c(bohrlab::bohr_rogosinski_sum(f->impl, {z_re, z_im}, big_n));
  });
}

bohrlab_status bohrlab_rogosinski_partial(const bohrlab_series* f, double z_re,
                                          double z_im, size_t big_n, double* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null pointer argument");
    *out = bohrlab::rogosinski_partial(f->impl, {z_re, z_im}, big_n);
  });
}

/* --- radius ------------------------------------------------------------------ */

bohrlab_status bohrlab_residual(bohrlab_family family, bohrlab_params params, double r,
                                double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = bohrlab::residual(to_problem(family, params), r);
  });
}

bohrlab_status bohrlab_domain_ceiling(bohrlab_family family, bohrlab_params params,
                                      double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = bohrlab::domain_ceiling(to_problem(family, params));
  });
}

bohrlab_status bohrlab_radius_solve(bohrlab_family family, bohrlab_params params,
                                    double tol, bohrlab_radius_result* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const auto result = bohrlab::smallest_positive_root(to_problem(family, params), tol);
    out->radius = result.radius;
    out->residual = result.residual;
    out->bracket_lo = result.bracket_lo;
    out->bracket_hi = result.bracket_hi;
    out->iterations = result.iterations;
  });
}

double bohrlab_rk_closed_form(int k) { return bohrlab::rk_closed_form(k); }

double bohrlab_lambda_coeff(int m, int k) { return bohrlab::lambda_coeff(m, k); }

/* --- sharpness ----------------------------------------------------------------- */

bohrlab_status bohrlab_closed_gap(bohrlab_family family, bohrlab_params params,
                                  double a, double r, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = bohrlab::closed_gap(to_problem(family, params), a, r);
  });
}

bohrlab_status bohrlab_limit_gap(bohrlab_family family, bohrlab_params params,
                                 double r, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = bohrlab::limit_gap(to_problem(family, params), r);
  });
}

/* --- rendered reports ----------------------------------------------------------- */

bohrlab_status bohrlab_render_table(int table_id, bohrlab_format format,
                                    int precision, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(bohrlab::render_table(table_id, to_format(format), precision));
  });
}

bohrlab_status bohrlab_render_radius(bohrlab_family family, bohrlab_params params,
                                     double tol, bohrlab_format format, int precision,
                                     char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const auto problem = to_problem(family, params);
    const auto result = bohrlab::smallest_positive_root(problem, tol);
    *out = dup_string(bohrlab::render_radius(problem, result, to_format(format),
                                             precision));
  });
}

bohrlab_status bohrlab_render_sharpness(bohrlab_family family, bohrlab_params params,
                                        double a, double delta, bohrlab_format format,
                                        int precision, char** out, int* out_exceeds) {
  return guarded([&] {
    require(out != nullptr && out_exceeds != nullptr, "null output pointer");
    const auto problem = to_problem(family, params);
    const auto [below, above] = bohrlab::sharpness_sweep(problem, a, delta);
    *out = dup_string(
        bohrlab::render_sweep({below, above}, to_format(format), precision));
    *out_exceeds = (above.gap > 0.0 && below.gap <= 1e-6) ? 1 : 0;
  });
}

bohrlab_status bohrlab_render_sweep(bohrlab_family family, bohrlab_params params,
                                    double r_start, double r_end, double step,
                                    bohrlab_format format, int precision, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const auto problem = to_problem(family, params);
    const auto rows = bohrlab::figure_sweep(problem, r_start, r_end, step);
    *out = dup_string(bohrlab::render_sweep(rows, to_format(format), precision));
  });
}

bohrlab_status bohrlab_render_verify(bohrlab_family family, bohrlab_params params,
                                     int samples, uint64_t seed, double r_margin,
                                     bohrlab_format format, int precision, char** out,
                                     int* out_passed) {
  return guarded([&] {
    require(out != nullptr && out_passed != nullptr, "null output pointer");
    const auto problem = to_problem(family, params);
    const auto outcome = bohrlab::run_inequality_suite(problem, samples, seed, r_margin);
    *out = dup_string(
        bohrlab::render_verify(problem, outcome, to_format(format), precision));
    *out_passed = outcome.passed() ? 1 : 0;
  });
}

} /* extern "C" */
