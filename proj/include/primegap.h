/* C API for the primegap toolkit.
 *
 * Opaque handles + status codes over the C++ core. Every function returns
 * PG_OK or a pg_status error; pg_last_error() carries the message for the
 * most recent failure in the calling thread. Handles are immutable after
 * creation and safe to share across threads.
 */

#ifndef PRIMEGAP_H
#define PRIMEGAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PG_API __declspec(dllexport)
#else
#define PG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pg_status {
    PG_OK = 0,
    PG_ERR_INVALID_ARGUMENT = 1,
    PG_ERR_DOMAIN = 2,   /* outside a stated validity range (e.g. T <= 15) */
    PG_ERR_BUDGET = 3,   /* sieve span or scan budget exceeded */
    PG_ERR_COVERAGE = 4, /* query beyond sieved range / zero table */
    PG_ERR_PARSE = 5,    /* zero table file rejected */
    PG_ERR_INTERNAL = 6
} pg_status;

PG_API const char* pg_last_error(void);
PG_API const char* pg_version(void);

/* ---------------- sieve ---------------- */

typedef struct pg_sieve pg_sieve; /* classified range [2, hi] */

PG_API pg_status pg_sieve_create(uint64_t hi, pg_sieve** out);
PG_API void pg_sieve_free(pg_sieve* s);
PG_API uint64_t pg_sieve_coverage(const pg_sieve* s);
PG_API int pg_sieve_is_prime(const pg_sieve* s, uint64_t n);

typedef struct pg_chebyshev_values {
    double x;
    double psi;
    double theta;
    double psi1;
    uint64_t pi;
} pg_chebyshev_values;

PG_API pg_status pg_sieve_chebyshev(const pg_sieve* s, double x, pg_chebyshev_values* out);
PG_API pg_status pg_sieve_prev_prime(const pg_sieve* s, double x, uint64_t* out);
PG_API pg_status pg_sieve_next_prime(const pg_sieve* s, double x, uint64_t* out);

typedef struct pg_prime_power {
    uint64_t n;
    double log_p;    /* Lambda(n) */
    uint32_t power;  /* m in n = p^m; 1 for the prime itself */
} pg_prime_power;

/* Streams the prime powers with lo <= n <= hi in ascending order. A nonzero
 * callback return stops the iteration early (still PG_OK). */
typedef int (*pg_prime_power_cb)(const pg_prime_power* pp, void* user);
PG_API pg_status pg_sieve_window_powers(const pg_sieve* s, uint64_t lo, uint64_t hi,
                                        pg_prime_power_cb cb, void* user);

/* ---------------- zero tables ---------------- */

typedef struct pg_zeros pg_zeros;

/* limit = 0 loads the whole file. */
PG_API pg_status pg_zeros_load(const char* path, uint64_t limit, pg_zeros** out);
PG_API void pg_zeros_free(pg_zeros* z);
PG_API uint64_t pg_zeros_count(const pg_zeros* z);
PG_API double pg_zeros_max_ordinate(const pg_zeros* z);
PG_API double pg_zeros_ordinate(const pg_zeros* z, uint64_t k); /* 0-based, NaN if out of range */
PG_API const char* pg_zeros_digest(const pg_zeros* z);
PG_API pg_status pg_zeros_count_below(const pg_zeros* z, double T, uint64_t* out);

PG_API pg_status pg_nt_bound(double T, double* out);
PG_API pg_status pg_tail_gamma_sq_bound(double T, double* out);
PG_API pg_status pg_sum_inv_rho_sq(const pg_zeros* z, double* partial, double* tail_bound);

/* ---------------- explicit formulas ---------------- */

typedef struct pg_explicit_eval {
    double x; /* point actually evaluated (integral psi inputs shift by 1/2) */
    uint64_t zeros_used;
    double main_term;
    double zero_sum;
    double small_terms;
    double value;
    double truncation_tail_bound;
} pg_explicit_eval;

PG_API pg_status pg_psi_explicit(const pg_zeros* z, double x, uint64_t k,
                                 unsigned threads, pg_explicit_eval* out);
PG_API pg_status pg_psi1_explicit(const pg_zeros* z, double x, uint64_t k,
                                  unsigned threads, pg_explicit_eval* out);
PG_API pg_status pg_residual_epsilon(const pg_sieve* s, const pg_zeros* z, double x,
                                     uint64_t k, unsigned threads, double* center,
                                     double* half_width);

PG_API pg_status pg_weight_w(double n, double x, double h, double* out);
PG_API pg_status pg_weighted_sum_direct(const pg_sieve* s, double x, double h, double* out);
PG_API pg_status pg_weighted_sum_via_psi1(const pg_sieve* s, double x, double h, double* out);

typedef struct pg_sigma_split {
    double alpha;
    double cutoff;
    double sigma1;
    double sigma2_partial;
    double sigma2_tail_bound;
    double sigma1_bound; /* valid when has_bounds */
    double sigma2_bound;
    int has_bounds; /* cutoff > 15 */
} pg_sigma_split;

PG_API pg_status pg_sigma_exact(const pg_zeros* z, double x, double h, double alpha,
                                unsigned threads, pg_sigma_split* out);
PG_API pg_status pg_sigma1_bound(double x, double h, double alpha, double* out);
PG_API pg_status pg_sigma2_bound(double x, double h, double alpha, double* out);
PG_API pg_status pg_lower_bound_psi_window(double x, double h, double alpha, double* out);

/* ---------------- gap verification ---------------- */

typedef struct pg_gap_certificate {
    uint64_t p_lo;
    uint64_t p_hi;
    uint64_t gap;
    double normalized;
    int passes_4_over_pi;
    int passes_8_over_5;
} pg_gap_certificate;

typedef int (*pg_gap_failure_cb)(const pg_gap_certificate* cert, void* user);

PG_API pg_status pg_verify_interval_claim(const pg_sieve* s, double c, uint64_t x_max,
                                          pg_gap_failure_cb cb, void* user,
                                          uint64_t* n_failures, uint64_t* pairs_checked);
PG_API pg_status pg_max_normalized_gap(const pg_sieve* s, uint64_t x_max,
                                       pg_gap_certificate* cert, double* d_max);

PG_API pg_status pg_cramer_count_check(const pg_sieve* s, double x, double c,
                                       uint64_t* count, double* threshold, int* pass);

typedef struct pg_cramer_scan_result {
    int all_pass;
    uint64_t checked;
    uint64_t worst_x;
    double worst_margin;
    uint64_t failures;
} pg_cramer_scan_result;

PG_API pg_status pg_cramer_scan(const pg_sieve* s, uint64_t x_lo, uint64_t x_hi,
                                double c, pg_cramer_scan_result* out);

PG_API pg_status pg_schoenfeld_check(const pg_sieve* s, double x, int* lower_ok,
                                     int* upper_ok, double* diff);

typedef struct pg_schoenfeld_scan_result {
    int all_lower_ok;
    int all_upper_ok;
    uint64_t checked;
    uint64_t worst_lower_x;
    double worst_lower_margin;
    uint64_t worst_upper_x;
    double worst_upper_margin;
} pg_schoenfeld_scan_result;

PG_API pg_status pg_schoenfeld_scan(const pg_sieve* s, uint64_t x_lo, uint64_t x_hi,
                                    pg_schoenfeld_scan_result* out);

/* ---------------- constants ---------------- */

PG_API pg_status pg_asymptotic_coefficient(double alpha, double* out);
PG_API pg_status pg_minimize_asymptotic(double lo, double hi, double* alpha_star,
                                        double* value);
PG_API pg_status pg_sinc2_integral(double a, double* value, double* error_estimate);
PG_API pg_status pg_c_alpha(double alpha, double* out);
PG_API pg_status pg_theorem2_constant(double alpha, double* out);
PG_API pg_status pg_cramer_constant(double alpha, double* out);
PG_API pg_status pg_alpha_for_epsilon(double eps, double* out);

typedef struct pg_constant_report {
    double alpha;
    double integral_value;
    double quadrature_error_estimate;
    double c_alpha;
    double theorem2_constant;
    double cramer_constant;
} pg_constant_report;

PG_API pg_status pg_constant_report_run(double alpha, pg_constant_report* out);

/* ---------------- reproduction suite ---------------- */

typedef struct pg_criterion_result {
    int id;
    int pass;
    char name[96];
    char detail[384];
    double seconds;
} pg_criterion_result;

typedef int (*pg_criterion_cb)(const pg_criterion_result* r, void* user);

/* Runs the bundled verification suite. gap_scan_max / cramer_scan_max of 0
 * select the reference scales (1e7). n_failed receives the number of failed
 * criteria. */
PG_API pg_status pg_run_reproduction(const char* zeros_path, unsigned threads,
                                     uint64_t gap_scan_max, uint64_t cramer_scan_max,
                                     pg_criterion_cb cb, void* user, int* n_failed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PRIMEGAP_H */
