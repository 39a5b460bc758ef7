/* airrev — airline-review customer modeling library.
 *
 * C interface over the C++ core: opaque handles, integer status codes,
 * thread-local error messages. All returned strings are heap-allocated and
 * must be released with airrev_string_free().
 */
#ifndef AIRREV_H
#define AIRREV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define AIRREV_API __declspec(dllexport)
#elif defined(AIRREV_BUILDING_SHARED)
#  define AIRREV_API __attribute__((visibility("default")))
#else
#  define AIRREV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum airrev_status {
    AIRREV_OK = 0,
    AIRREV_ERR_ARGUMENT = 1, /* bad parameter or precondition violation */
    AIRREV_ERR_IO = 2,       /* filesystem failure */
    AIRREV_ERR_PARSE = 3,    /* unusable input data */
    AIRREV_ERR_NUMERIC = 4   /* numerical method failed */
} airrev_status;

typedef struct airrev_corpus airrev_corpus;
typedef struct airrev_result airrev_result;

AIRREV_API const char* airrev_version(void);

/* Message for the most recent failure on this thread; empty if none. */
AIRREV_API const char* airrev_last_error(void);

AIRREV_API void airrev_string_free(char* text);

/* ---- corpora ---------------------------------------------------------- */

/* Reads and validates a review CSV. Invalid rows are rejected, not fatal;
 * a malformed header or an input with zero valid rows is. */
AIRREV_API airrev_status airrev_corpus_load(const char* path, airrev_corpus** out);

/* Same, from an in-memory buffer. label names the corpus in reports. */
AIRREV_API airrev_status airrev_corpus_parse(const char* text, const char* label,
                                             airrev_corpus** out);

/* Builds a planted-model synthetic corpus from a JSON config document. */
AIRREV_API airrev_status airrev_corpus_generate(const char* config_json, airrev_corpus** out);

AIRREV_API airrev_status airrev_corpus_save(const airrev_corpus* corpus, const char* path);
AIRREV_API void airrev_corpus_free(airrev_corpus* corpus);

AIRREV_API int64_t airrev_corpus_size(const airrev_corpus* corpus);
AIRREV_API int64_t airrev_corpus_rejected(const airrev_corpus* corpus);

/* "line N: reason" per rejected row. */
AIRREV_API airrev_status airrev_corpus_rejection_report(const airrev_corpus* corpus, char** out);

/* Atomically writes the full validation report (run header + rejections). */
AIRREV_API airrev_status airrev_corpus_write_validation_report(const airrev_corpus* corpus,
                                                               const char* path);

/* ---- modeling runs ----------------------------------------------------- */

/* Per-group regression over a categorical feature: "cabin" or "airline". */
AIRREV_API airrev_status airrev_run_feature_model(const airrev_corpus* corpus,
                                                  const char* feature, airrev_result** out);

/* Average pooled regression MAE for k = k_min..k_max, `repeats` seeded
 * k-means runs each. Deterministic in master_seed. */
AIRREV_API airrev_status airrev_run_sweep(const airrev_corpus* corpus, int k_min, int k_max,
                                          int repeats, uint64_t master_seed,
                                          airrev_result** out);

/* PCA(2) + k-means + per-cluster regression and statistics. init is "paper"
 * (the six fixed centers; requires k = 6) or "random" (seeded). */
AIRREV_API airrev_status airrev_run_cluster_model(const airrev_corpus* corpus, int k,
                                                  const char* init, uint64_t seed,
                                                  airrev_result** out);

/* ---- results ----------------------------------------------------------- */

/* "feature-model", "sweep" or "cluster-model". */
AIRREV_API const char* airrev_result_kind(const airrev_result* result);

/* Renders the report; format is "text" or "tabular". */
AIRREV_API airrev_status airrev_result_render(const airrev_result* result, const char* format,
                                              char** out);

/* Writes the report to report_path plus its plot-data companions
 * (<stem>_betas.csv, <stem>_mae_curve.csv, <stem>_scatter.csv,
 * <stem>_centers.csv as applicable). All writes are atomic. */
AIRREV_API airrev_status airrev_result_write(const airrev_result* result,
                                             const char* report_path, const char* format);

/* Sweep results: average pooled MAE at a given k. */
AIRREV_API airrev_status airrev_result_avg_mae(const airrev_result* result, int k, double* out);

/* Cluster-model results: member count of one cluster. */
AIRREV_API airrev_status airrev_result_cluster_total(const airrev_result* result, int cluster,
                                                     int64_t* out);

AIRREV_API void airrev_result_free(airrev_result* result);

#ifdef __cplusplus
}
#endif

#endif /* AIRREV_H */
