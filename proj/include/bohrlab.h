/* C interface to the bohrlab shared library.
 *
 * All functions that can fail return a bohrlab_status; out-parameters are
 * written only on BOHRLAB_OK. Handles returned through double pointers are
 * owned by the caller and released with the matching _free function. String
 * results are heap-allocated and released with bohrlab_string_free.
 */
#ifndef BOHRLAB_H
#define BOHRLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bohrlab_status {
  BOHRLAB_OK = 0,
  BOHRLAB_ERR_INVALID_ARGUMENT = 1,
  BOHRLAB_ERR_DOMAIN = 2,
  BOHRLAB_ERR_NO_ROOT = 3,
  BOHRLAB_ERR_INTERNAL = 4
} bohrlab_status;

typedef enum bohrlab_family {
  BOHRLAB_FAMILY_TH1 = 0,
  BOHRLAB_FAMILY_TH2 = 1,
  BOHRLAB_FAMILY_TH6 = 2,
  BOHRLAB_FAMILY_TH3 = 3,
  BOHRLAB_FAMILY_TH5 = 4,
  BOHRLAB_FAMILY_TH4 = 5,
  BOHRLAB_FAMILY_AUX_RMP = 6,
  BOHRLAB_FAMILY_AUX_R2MP = 7,
  BOHRLAB_FAMILY_AUX_RK = 8,
  BOHRLAB_FAMILY_THMB_QUARTIC = 9
} bohrlab_family;

typedef enum bohrlab_format {
  BOHRLAB_FORMAT_CSV = 0,
  BOHRLAB_FORMAT_MARKDOWN = 1,
  BOHRLAB_FORMAT_JSON = 2
} bohrlab_format;

/* Integer parameters of a radius problem; n is the derivative count of the
 * th5 family and is ignored elsewhere. */
typedef struct bohrlab_params {
  int m;
  int p;
  int k;
  int n;
} bohrlab_params;

typedef struct bohrlab_radius_result {
  double radius;
  double residual;
  double bracket_lo;
  double bracket_hi;
  int iterations;
} bohrlab_radius_result;

typedef struct bohrlab_certified {
  double value;
  double error_bound;
} bohrlab_certified;

typedef struct bohrlab_verify_summary {
  int samples;
  int evaluations;
  int failures;
  double max_lhs;
  double radius;
  double r_used;
} bohrlab_verify_summary;

/* Opaque handles. */
typedef struct bohrlab_series bohrlab_series;
typedef struct bohrlab_schwarz bohrlab_schwarz;

const char* bohrlab_version(void);
const char* bohrlab_status_name(bohrlab_status status);
/* Message of the most recent error on this thread; empty string if none. */
const char* bohrlab_last_error(void);
void bohrlab_string_free(char* s);

/* --- unit-ball series ---------------------------------------------------- */

/* truncation_order == 0 selects the library default (BOHR_LAB_TRUNC or 512). */
bohrlab_status bohrlab_series_moebius_plus(double a, size_t truncation_order,
                                           bohrlab_series** out);
bohrlab_status bohrlab_series_moebius_minus(double a, size_t truncation_order,
                                            bohrlab_series** out);
bohrlab_status bohrlab_series_sample(uint64_t seed, size_t blaschke_degree,
                                     size_t truncation_order, bohrlab_series** out);
/* coeffs: interleaved re,im pairs for a0..aT (2*(count) doubles). */
bohrlab_status bohrlab_series_create(const double* coeffs_re_im, size_t count,
                                     int ball_certified, bohrlab_series** out);
void bohrlab_series_free(bohrlab_series* s);

size_t bohrlab_series_truncation_order(const bohrlab_series* s);
bohrlab_status bohrlab_series_coeff(const bohrlab_series* s, size_t n, double* re,
                                    double* im);
bohrlab_status bohrlab_series_eval(const bohrlab_series* s, double w_re, double w_im,
                                   double* out_re, double* out_im,
                                   double* out_error_bound);
bohrlab_status bohrlab_series_deriv_over_factorial(const bohrlab_series* s, size_t n,
                                                   double w_re, double w_im,
                                                   double* out_re, double* out_im,
                                                   double* out_error_bound);
bohrlab_status bohrlab_series_majorant_sum(const bohrlab_series* s, double r,
                                           size_t n_start, bohrlab_certified* out);
bohrlab_status bohrlab_series_quadratic_sum(const bohrlab_series* s, double r,
                                            size_t n_start, bohrlab_certified* out);
bohrlab_status bohrlab_series_area_sum(const bohrlab_series* s, double r,
                                       bohrlab_certified* out);
bohrlab_status bohrlab_series_refined_tail(const bohrlab_series* s, double r,
                                           size_t big_n, bohrlab_certified* out);

/* --- Schwarz functions --------------------------------------------------- */

bohrlab_status bohrlab_schwarz_monomial(int order, bohrlab_schwarz** out);
bohrlab_status bohrlab_schwarz_scaled_monomial(int order, double scale_re,
                                               double scale_im, bohrlab_schwarz** out);
bohrlab_status bohrlab_schwarz_monomial_times_blaschke(int order,
                                                       const double* zeros_re_im,
                                                       size_t n_zeros, double phase,
                                                       bohrlab_schwarz** out);
void bohrlab_schwarz_free(bohrlab_schwarz* w);

bohrlab_status bohrlab_schwarz_eval(const bohrlab_schwarz* w, double z_re, double z_im,
                                    double* out_re, double* out_im);
bohrlab_status bohrlab_schwarz_envelope(const bohrlab_schwarz* w, double r,
                                        double* out);
bohrlab_status bohrlab_schwarz_verify(const bohrlab_schwarz* w, size_t grid_size,
                                      int* out_ok);

/* --- inequality left-hand sides ------------------------------------------ */

/* Evaluates the family's left-hand side at z = r with the given series and
 * Schwarz functions. omega_p is ignored by th6/th3/th5/th4; lambda < 0
 * selects the theorem value lambda_coeff(order(omega_m), order(omega_k)) for
 * th6 and is ignored elsewhere; derivative_count is the th5 N. */
bohrlab_status bohrlab_lhs(bohrlab_family family, const bohrlab_series* f,
                           const bohrlab_schwarz* omega_m,
                           const bohrlab_schwarz* omega_p,
                           const bohrlab_schwarz* omega_k, double r, double lambda,
                           int derivative_count, bohrlab_certified* out);

bohrlab_status bohrlab_bohr_rogosinski_sum(const bohrlab_series* f, double z_re,
                                           double z_im, size_t big_n,
                                           bohrlab_certified* out);
bohrlab_status bohrlab_rogosinski_partial(const bohrlab_series* f, double z_re,
                                          double z_im, size_t big_n, double* out);

/* --- radius equations and tables ------------------------------------------ */

bohrlab_status bohrlab_residual(bohrlab_family family, bohrlab_params params, double r,
                                double* out);
bohrlab_status bohrlab_domain_ceiling(bohrlab_family family, bohrlab_params params,
                                      double* out);
bohrlab_status bohrlab_radius_solve(bohrlab_family family, bohrlab_params params,
                                    double tol, bohrlab_radius_result* out);
double bohrlab_rk_closed_form(int k);
double bohrlab_lambda_coeff(int m, int k);

/* --- sharpness ------------------------------------------------------------ */

bohrlab_status bohrlab_closed_gap(bohrlab_family family, bohrlab_params params,
                                  double a, double r, double* out);
bohrlab_status bohrlab_limit_gap(bohrlab_family family, bohrlab_params params,
                                 double r, double* out);

/* --- rendered reports (CLI surface) ---------------------------------------
 * table_id: 1, 2, 3 (r_k/lambda), 4 (R3, CLI spelling "3p"), 5 (R5). */

bohrlab_status bohrlab_render_table(int table_id, bohrlab_format format,
                                    int precision, char** out);
bohrlab_status bohrlab_render_radius(bohrlab_family family, bohrlab_params params,
                                     double tol, bohrlab_format format, int precision,
                                     char** out);
/* out_exceeds is set to 1 when the gap just above the radius is positive and
 * the gap just below is <= 1e-6 (the sharpness demonstration succeeded). */
bohrlab_status bohrlab_render_sharpness(bohrlab_family family, bohrlab_params params,
                                        double a, double delta, bohrlab_format format,
                                        int precision, char** out, int* out_exceeds);
bohrlab_status bohrlab_render_sweep(bohrlab_family family, bohrlab_params params,
                                    double r_start, double r_end, double step,
                                    bohrlab_format format, int precision, char** out);
/* out_passed is set to 1 when every sampled evaluation stayed at or below
 * 1 + 1e-9. */
bohrlab_status bohrlab_render_verify(bohrlab_family family, bohrlab_params params,
                                     int samples, uint64_t seed, double r_margin,
                                     bohrlab_format format, int precision, char** out,
                                     int* out_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BOHRLAB_H */
