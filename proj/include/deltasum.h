/* deltasum C API: divisor-concentration sums, explicit prime-sum bounds and
 * the inequality-verification harness behind the `deltasum` CLI.
 *
 * All functions returning ds_status follow the same contract: DS_OK on
 * success, a nonzero code otherwise; ds_last_error() returns a thread-local
 * message for the most recent failure on the calling thread. Strings handed
 * out through char** are heap-allocated and must be released with
 * ds_string_free().
 */
#ifndef DELTASUM_H
#define DELTASUM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int ds_status;

enum {
  DS_OK = 0,
  DS_ERR_CHECK_FAILED = 1, /* verification ran, some check has a nonpositive margin */
  DS_ERR_USAGE = 2,        /* unknown id / malformed argument / bad config key */
  DS_ERR_DOMAIN = 3,       /* precondition violation (lemma scope, parameter range) */
  DS_ERR_RANGE = 4,        /* argument outside a built table's range */
  DS_ERR_RESOURCE = 5,     /* budget exceeded (memory, window, enumeration) */
  DS_ERR_PRECISION = 6,    /* flagged cancellation / quadrature non-convergence */
  DS_ERR_FACTOR = 7,       /* cofactor not fully factored */
  DS_ERR_IO = 8,
  DS_ERR_INTERNAL = 9
};

const char *ds_version(void);
const char *ds_last_error(void);
void ds_string_free(char *s);

/* ---- prime tables ----------------------------------------------------- */

typedef struct ds_prime_table ds_prime_table;

/* Sieve of all primes <= limit. cache_path (nullable) points at an "ESSV1"
 * segment-cache file: reused when compatible, created otherwise. Results are
 * bit-identical with and without the cache. */
ds_status ds_prime_table_build(uint64_t limit, const char *cache_path,
                               ds_prime_table **out);
void ds_prime_table_free(ds_prime_table *t);
uint64_t ds_prime_table_limit(const ds_prime_table *t);
uint64_t ds_prime_table_count(const ds_prime_table *t);
/* pi(x) and theta(x) = sum of log p over p <= x. */
uint64_t ds_pi(const ds_prime_table *t, double x);
double ds_theta(const ds_prime_table *t, double x);
uint64_t ds_nth_prime(const ds_prime_table *t, uint64_t n); /* 1-based */

ds_status ds_mertens_sum(const ds_prime_table *t, double x, double *out);
ds_status ds_prime_log_power_sum(const ds_prime_table *t, double x,
                                 double alpha, double *out);
ds_status ds_prime_power_sum(const ds_prime_table *t, double x, double alpha,
                             double *out);
ds_status ds_tau_abs_prime_sum(const ds_prime_table *t, double x, double v,
                               double *out);

/* Upper bound for sum_{p > x} f(p) log p. weight_id: "t^-2", "s1", "s2". */
ds_status ds_ramare_tail(const char *weight_id, double x, double *out);

/* s1 = sum_{p<=cutoff} (3p-2)/(p(p-1)^2), s2 = sum_{p<=cutoff}
 * 2(3p^2-3p+1)/(p(p-1)^3) log p, plus tail bounds past the cutoff.
 * out = {s1, s2, s1_tail, s2_tail}; *warn set when cutoff is below the
 * reference cutoffs (1e4 for s1, 1e6 for s2). */
ds_status ds_prime_constant_sums(const ds_prime_table *t, uint64_t cutoff,
                                 double out[4], int *warn);

/* ---- exact arithmetic functions --------------------------------------- */

/* ascending (prime, exponent) pairs; cap = capacity of both arrays. */
ds_status ds_factorize(uint64_t n, uint64_t *primes, uint32_t *exps, int cap,
                       int *count);
/* decimal rendering; promoted to big integers instead of wrapping. */
ds_status ds_tau_k(uint64_t n, int k, char *buf, size_t buflen);
ds_status ds_jordan_weighted(uint64_t n, double a, double *out);
ds_status ds_delta(uint64_t n, uint64_t *value, uint64_t *witness);
ds_status ds_delta_k(uint64_t n, int k, uint64_t *value);
ds_status ds_tau_complex(uint64_t n, double v, double *re, double *im);
ds_status ds_smooth_count(double z, double t, uint64_t *out);
ds_status ds_sifted_count(double x, double y, double z, uint64_t *out);
/* f_id: "tau<k>" (k = 1..9), "delta", "delta_omega_le<j>". */
ds_status ds_short_sum(const char *f_id, double x, double y, double *out);
ds_status ds_weighted_delta_sums(double x, double t, double *S, double *Sh);

/* ---- extended-range log-space reals ----------------------------------- */

typedef struct {
  int sign;     /* -1, 0, +1 */
  double lnmag; /* natural log of |value|; ignored when sign == 0 */
  int flagged;  /* precision flag set by cancelling additions */
} ds_extreal;

ds_extreal ds_ext_from_double(double x);
ds_extreal ds_ext_from_ln(double lnmag); /* positive value exp(lnmag) */
ds_extreal ds_ext_add(ds_extreal a, ds_extreal b);
ds_extreal ds_ext_mul(ds_extreal a, ds_extreal b);
ds_extreal ds_ext_pow(ds_extreal a, double e);
int ds_ext_cmp(ds_extreal a, ds_extreal b); /* -1, 0, +1 */
double ds_ext_log10(ds_extreal a);

typedef struct {
  int k;
  double ell;
  double A;  /* 125^k * 1092 / k^3 */
  double B;  /* (1/2) e^(4/e) k^(20 ell) */
  ds_extreal C;
  ds_extreal D;
  ds_extreal Lambda;
  ds_extreal ln_x_threshold; /* value is ln x_min */
  int delta_flag;            /* A < B */
} ds_constant_bundle;

ds_status ds_constants(int k, double ell, ds_constant_bundle *out);
ds_status ds_constants_json(int k, double ell, char **json_out);
ds_status ds_x_threshold(double ell, ds_extreal *out);
ds_status ds_main_rhs(const ds_constant_bundle *b, double x, double y,
                      double S, ds_extreal *out);
/* j <= 0 means "j absent". */
ds_status ds_corollary_rhs(double ell, double x, double y, int j,
                           ds_extreal *out);
ds_status ds_landreau_bound(int k, double x, double y, ds_extreal *out,
                            double *Mk);

/* ---- special functions ------------------------------------------------ */

ds_status ds_lambert_w0(double x, double *out);
ds_status ds_lambert_wm1(double x, double *out);
ds_status ds_li(double x, double *out);
double ds_frak_m(void);

/* ---- verification harness --------------------------------------------- */

/* ids_csv: "all" or a comma-separated list of check ids (ds_check_ids).
 * config_text: key=value lines, same grammar as the CLI --config file;
 * NULL for defaults. *report_out receives the full report in the configured
 * format (json|csv). Returns DS_OK when every selected check passed,
 * DS_ERR_CHECK_FAILED when the run completed with failures (report still
 * written), other codes on setup errors. */
ds_status ds_verify_run(const char *ids_csv, const char *config_text,
                        char **report_out);
ds_status ds_check_ids(char **json_out);

ds_status ds_classify_window(double x, double y, const char *f_id,
                             char **json_out);
ds_status ds_delta_json(uint64_t n, char **json_out);
ds_status ds_shortsum_json(const char *f_id, double x, double y,
                           char **json_out);
ds_status ds_hooley_json(double x, const double *ts, int nts, char **json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DELTASUM_H */
