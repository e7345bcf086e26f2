#ifndef ELKIES_ELKIES_H
#define ELKIES_ELKIES_H

/* C interface to the elkies library. Every call returns an elkies_status;
 * on failure elkies_last_error() describes the problem for the calling
 * thread. Handles are opaque and owned by the caller once created.
 *
 * String outputs follow one convention: the text plus a terminating NUL is
 * copied into buf when cap is large enough, *len (if non-null) always
 * receives the text length, and ELKIES_E_BUFFER is returned when cap is too
 * small. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ELKIES_API __declspec(dllexport)
#else
#define ELKIES_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum elkies_status {
  ELKIES_OK = 0,
  ELKIES_E_INVALID_ARGUMENT = 1,
  ELKIES_E_DOMAIN = 2,
  ELKIES_E_CONTEXT_MISMATCH = 3,
  ELKIES_E_INFEASIBLE = 4,
  ELKIES_E_BAD_REDUCTION = 5,
  ELKIES_E_IO = 6,
  ELKIES_E_INTERNAL = 7,
  ELKIES_E_BUFFER = 8
} elkies_status;

typedef struct elkies_field elkies_field;
typedef struct elkies_curve elkies_curve;
typedef struct elkies_report elkies_report;

ELKIES_API const char* elkies_version(void);
ELKIES_API const char* elkies_status_name(elkies_status status);
/* Message of the last failed call on this thread; empty after a success. */
ELKIES_API const char* elkies_last_error(void);

/* ---- combinatorics ---- */

/* alpha_h as a reduced fraction "num/den" */
ELKIES_API elkies_status elkies_alpha(unsigned h, char* buf, size_t cap, size_t* len);
ELKIES_API elkies_status elkies_alpha_double(unsigned h, double* out);
/* f(h) = 2h^2 + h + 1 */
ELKIES_API elkies_status elkies_f(unsigned h, uint64_t* out);
/* decimal strings, exact */
ELKIES_API elkies_status elkies_gauss_moment(unsigned k, char* buf, size_t cap, size_t* len);
ELKIES_API elkies_status elkies_pairing_count(unsigned nu, char* buf, size_t cap, size_t* len);

/* ---- finite fields ---- */

/* F_q for a prime power q, with the default modulus. */
ELKIES_API elkies_status elkies_field_create(uint64_t q, elkies_field** out);
ELKIES_API void elkies_field_destroy(elkies_field* field);
ELKIES_API elkies_status elkies_field_order(const elkies_field* field, uint64_t* out);
/* "q=<p>^<e>;modulus=<c0,...,ce>" */
ELKIES_API elkies_status elkies_field_header(const elkies_field* field, char* buf, size_t cap, size_t* len);
/* Factors the polynomial with coefficient codes coeffs[0..n) (constant term
 * first). Output lines: "unit=<code>" then one "<serialized factor>^<mult>"
 * per factor. */
ELKIES_API elkies_status elkies_poly_factor(const elkies_field* field, const uint64_t* coeffs, size_t n, char* buf,
                                            size_t cap, size_t* len);

/* ---- symplectic groups ---- */

typedef struct elkies_census_row {
  uint64_t q;
  unsigned h;
  uint64_t lambda0;
  uint64_t split_sep;
  uint64_t split_insep;
  uint64_t total;
} elkies_census_row;

/* Exact census of GSp_{2h}(F_q). With has_lambda0 == 0 every multiplier gets
 * a row; rows needs room for q - 1 entries. *count receives the row count. */
ELKIES_API elkies_status elkies_census(const elkies_field* field, unsigned h, int has_lambda0, uint64_t lambda0,
                                       unsigned shards, elkies_census_row* rows, size_t cap, size_t* count);
/* Same census, written as CSV to path. */
ELKIES_API elkies_status elkies_census_write_csv(const elkies_field* field, unsigned h, int has_lambda0,
                                                 uint64_t lambda0, unsigned shards, const char* path);
/* Closed-form number of split elements of GSp_4(F_l), decimal string. */
ELKIES_API elkies_status elkies_gsp4_split_count(uint64_t ell, char* buf, size_t cap, size_t* len);

typedef enum elkies_split { ELKIES_NOT_SPLIT = 0, ELKIES_SPLIT = 1, ELKIES_SPLIT_UNKNOWN = 2 } elkies_split;

/* entries: row-major (2h)x(2h) codes. Fails with ELKIES_E_DOMAIN when the
 * matrix is not a symplectic similitude. */
ELKIES_API elkies_status elkies_split_bruteforce(const elkies_field* field, unsigned h, const uint64_t* entries,
                                                 int* split);
ELKIES_API elkies_status elkies_split_charpoly(const elkies_field* field, unsigned h, const uint64_t* entries,
                                               elkies_split* verdict);

/* ---- elliptic curves ---- */

/* a = {a1, a2, a3, a4, a6} */
ELKIES_API elkies_status elkies_curve_create(const int64_t a[5], const uint64_t* bad_primes, size_t n_bad,
                                             elkies_curve** out);
ELKIES_API elkies_status elkies_curve_create_default(elkies_curve** out);
ELKIES_API void elkies_curve_destroy(elkies_curve* curve);
ELKIES_API elkies_status elkies_curve_trace(const elkies_curve* curve, uint64_t p, uint64_t seed, int64_t* trace);
ELKIES_API elkies_status elkies_curve_count_points(const elkies_curve* curve, uint64_t p, uint64_t seed,
                                                   uint64_t* order);
/* N_e(p, L) over odd good primes l in [L, 2L] */
ELKIES_API elkies_status elkies_curve_elkies_count(const elkies_curve* curve, uint64_t p, uint64_t L, uint64_t seed,
                                                   unsigned* count);

/* ---- sweep ---- */

typedef struct elkies_sweep_config {
  const elkies_curve* curve; /* null selects 11a3 */
  uint64_t P;
  uint64_t L;
  const unsigned* moment_orders;
  size_t n_moments;
  uint64_t seed;
  unsigned shards;
  int keep_per_prime;
} elkies_sweep_config;

/* Fills the defaults: 11a3, P = 100000, L = 100, moments 1..4, seed 42, one shard. */
ELKIES_API void elkies_sweep_config_init(elkies_sweep_config* config);
ELKIES_API elkies_status elkies_sweep(const elkies_sweep_config* config, elkies_report** out);
ELKIES_API void elkies_report_destroy(elkies_report* report);

typedef struct elkies_report_summary {
  uint64_t P;
  uint64_t L;
  unsigned n_primes_ell;
  double alpha;
  double mu;
  double sigma;
  uint64_t population;
  uint64_t primes_in_range;
  double sample_mean;
  double sample_variance;
  double wall_seconds;
} elkies_report_summary;

typedef struct elkies_moment {
  unsigned k;
  double empirical;
  double gaussian;
  double abs_diff;
} elkies_moment;

typedef struct elkies_chi_square {
  double statistic;
  unsigned dof;
  double p_value;
  unsigned buckets;
} elkies_chi_square;

ELKIES_API elkies_status elkies_report_summary_get(const elkies_report* report, elkies_report_summary* out);
/* counts[j] = #{p : N_e(p) = j}; needs n_primes_ell + 1 slots */
ELKIES_API elkies_status elkies_report_histogram(const elkies_report* report, uint64_t* counts, size_t cap,
                                                 size_t* n);
ELKIES_API elkies_status elkies_report_moments(const elkies_report* report, elkies_moment* rows, size_t cap,
                                               size_t* n);
/* Moments of arbitrary orders up to the largest configured order. */
ELKIES_API elkies_status elkies_report_moments_for(const elkies_report* report, const unsigned* orders, size_t n,
                                                   elkies_moment* rows);
ELKIES_API elkies_status elkies_report_chi_square(const elkies_report* report, double min_expected,
                                                  elkies_chi_square* out);
ELKIES_API elkies_status elkies_report_json(const elkies_report* report, char* buf, size_t cap, size_t* len);
ELKIES_API elkies_status elkies_report_from_json(const char* text, elkies_report** out);
ELKIES_API elkies_status elkies_report_equal(const elkies_report* a, const elkies_report* b, int* equal);
ELKIES_API elkies_status elkies_report_write_json(const elkies_report* report, const char* path);
ELKIES_API elkies_status elkies_report_write_csv(const elkies_report* report, const char* path);
ELKIES_API elkies_status elkies_report_write_svg(const elkies_report* report, const char* path);

#ifdef __cplusplus
}
#endif

#endif
