/*
 * circhad.h - C interface to the circulant approximate-Hadamard toolkit.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a ch_status; on failure ch_last_error() holds a
 * message for the calling thread until its next failing call. Strings
 * returned through char** are NUL-terminated and released with
 * ch_string_free.
 */
#ifndef CIRCHAD_H
#define CIRCHAD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define CH_API __declspec(dllexport)
#else
#  define CH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ch_status {
  CH_OK = 0,
  CH_ERR_ARGUMENT = 1,  /* invalid parameter value */
  CH_ERR_SIZE = 2,      /* a size cap was exceeded */
  CH_ERR_PARSE = 3,     /* malformed input text */
  CH_ERR_IO = 4,        /* file could not be read or written */
  CH_ERR_TOLERANCE = 5, /* internal numerical cross-check failed */
  CH_ERR_INTERNAL = 6
} ch_status;

typedef enum ch_objective {
  CH_OBJECTIVE_CONDITION = 0,
  CH_OBJECTIVE_DEVIATION = 1
} ch_objective;

typedef struct ch_sign_vector ch_sign_vector;
typedef struct ch_search_outcome ch_search_outcome;

typedef struct ch_report {
  size_t n;
  double sigma_min;
  double sigma_max;
  double kappa; /* +infinity when singular */
  double sqrt_n;
  double deviation;
  double deviation_normalized;
  int singular;
} ch_report;

CH_API const char* ch_version(void);
CH_API const char* ch_last_error(void);
CH_API void ch_string_free(char* s);

/* ---- sign vectors ---------------------------------------------------- */

CH_API ch_status ch_sign_vector_create(const int8_t* signs, size_t n, ch_sign_vector** out);
CH_API ch_status ch_sign_vector_from_json(const char* text, ch_sign_vector** out);
CH_API ch_status ch_sign_vector_read(const char* path, ch_sign_vector** out);
/* hex != 0 selects the {"n", "bits"} form. Provenance, if any, is kept. */
CH_API ch_status ch_sign_vector_to_json(const ch_sign_vector* v, int hex, char** out);
CH_API void ch_sign_vector_free(ch_sign_vector* v);
CH_API size_t ch_sign_vector_length(const ch_sign_vector* v);
CH_API ch_status ch_sign_vector_signs(const ch_sign_vector* v, int8_t* buf, size_t len);

CH_API ch_status ch_periodic_autocorrelation(const ch_sign_vector* v, size_t lag, int64_t* out);
CH_API ch_status ch_is_circulant_hadamard(const ch_sign_vector* v, int* out);
CH_API ch_status ch_canonicalize(const ch_sign_vector* v, int decimation, ch_sign_vector** rep,
                                 uint64_t* orbit_size);

/* ---- spectra ----------------------------------------------------------- */

/* re/im receive lambda_0..lambda_{n-1}; len must equal n. */
CH_API ch_status ch_eigenvalues(const ch_sign_vector* v, double* re, double* im, size_t len);
CH_API ch_status ch_eigenvalues_naive(const ch_sign_vector* v, double* re, double* im, size_t len);
CH_API ch_status ch_analyze(const ch_sign_vector* v, ch_report* out);
CH_API ch_status ch_report_to_json(const ch_report* r, char** out);
CH_API ch_status ch_apply_circulant(const ch_sign_vector* v, const double* x, double* y, size_t len);
/* Moduli histogram CSV (bin_lo,bin_hi,count). */
CH_API ch_status ch_moduli_histogram_csv(const ch_sign_vector* v, size_t bins, char** out);
/* Profile CSV (t,re,im,abs). full_circle != 0 ignores t_lo/t_hi. */
CH_API ch_status ch_circle_profile_csv(const ch_sign_vector* v, int full_circle, double t_lo, double t_hi,
                                       size_t samples, char** out);

/* ---- constructions (results carry a provenance block) ---------------- */

CH_API ch_status ch_rudin_shapiro(unsigned k, ch_sign_vector** out);
CH_API ch_status ch_random_signs(size_t n, uint64_t seed, ch_sign_vector** out);
/* flips < 0 selects the default ceil((sqrt(q) - 1) / 2). */
CH_API ch_status ch_legendre_modified(uint64_t q, uint64_t seed, int64_t flips, ch_sign_vector** out);
CH_API ch_status ch_cef_seed12(ch_sign_vector** out);
/* Applies the squaring map `generations` times. history (may be NULL)
 * receives generations + 1 grid minima. */
CH_API ch_status ch_cef_iterate(const ch_sign_vector* seed, unsigned generations, ch_sign_vector** out,
                                double* history, size_t history_len);

/* ---- search ------------------------------------------------------------ */

CH_API ch_status ch_exhaustive_search(size_t n, ch_objective obj, size_t cap, unsigned threads,
                                      ch_search_outcome** out);
CH_API ch_status ch_local_search(size_t n, ch_objective obj, uint64_t seed, unsigned restarts,
                                 unsigned max_iters, unsigned threads, ch_search_outcome** out);
/* t0 <= 0 selects the default starting temperature. */
CH_API ch_status ch_anneal(size_t n, ch_objective obj, uint64_t seed, double t0, double cooling,
                           unsigned epochs, ch_search_outcome** out);
CH_API ch_status ch_search_outcome_to_json(const ch_search_outcome* o, char** out);
CH_API ch_status ch_search_outcome_best(const ch_search_outcome* o, ch_sign_vector** out);
CH_API ch_status ch_search_outcome_report(const ch_search_outcome* o, ch_report* out);
CH_API void ch_search_outcome_free(ch_search_outcome* o);

/* ---- conjecture probes ------------------------------------------------- */

/* Scan CSV (n,min_deviation,normalized,exact,method). envelope (may be NULL)
 * receives the minimum normalized deviation over exact rows with n > 4, or
 * NaN when there is none. */
CH_API ch_status ch_scan_deviation(size_t n_lo, size_t n_hi, size_t exact_cap, uint64_t seed,
                                   unsigned restarts, unsigned threads, char** csv, double* envelope);
/* CSV (n,hadamard_exists). */
CH_API ch_status ch_ryser_verify(size_t n_hi, size_t cap, unsigned threads, char** csv);
/* SeedStats JSON. When hist_bins > 0, hist_csvs (may be NULL) receives an
 * array of `seeds` histogram CSVs, released with ch_string_array_free. */
CH_API ch_status ch_legendre_statistics(uint64_t q, unsigned seeds, unsigned threads, size_t hist_bins,
                                        char** json, char*** hist_csvs);
CH_API void ch_string_array_free(char** arr, size_t count);

/* ---- files ------------------------------------------------------------- */

CH_API ch_status ch_write_file(const char* path, const char* contents);
CH_API ch_status ch_read_file(const char* path, char** contents);

#ifdef __cplusplus
}
#endif

#endif /* CIRCHAD_H */
