/* resilq — resilience and adaptability quantification for monthly
 * performance series.
 *
 * C API of the shared library. All functions return rq_status; RQ_OK is 0.
 * A human-readable message for the most recent failure on the calling
 * thread is available via rq_last_error(). Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * *_free function. Handles are opaque.
 */

#ifndef RESILQ_H
#define RESILQ_H

#include <stdint.h>

#if defined(_WIN32)
#  define RESILQ_API __declspec(dllexport)
#else
#  define RESILQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values are stable and double as CLI exit codes. */
typedef enum rq_status {
  RQ_OK = 0,
  RQ_ERR_INVALID_ARGUMENT = 1,
  RQ_ERR_FIT_FAILED = 2, /* analysis completed partially; report still written */
  RQ_ERR_MALFORMED_ROW = 3,
  RQ_ERR_MISSING_MONTH = 4,
  RQ_ERR_DUPLICATE_MONTH = 5,
  RQ_ERR_NEGATIVE_VALUE = 6,
  RQ_ERR_WINDOW_TOO_LARGE = 7,
  RQ_ERR_ZERO_ORIGIN = 8,
  RQ_ERR_CUTOFF_OUT_OF_RANGE = 9,
  RQ_ERR_ALIGNMENT_MISMATCH = 10,
  RQ_ERR_DEGENERATE_COVARIATE = 11,
  RQ_ERR_NON_CONVERGENCE = 12,
  RQ_ERR_SERIES_TOO_SHORT = 13,
  RQ_ERR_COVARIATE_MISSING = 14,
  RQ_ERR_COVARIATE_TOO_SHORT = 15,
  RQ_ERR_ALL_STARTS_FAILED = 16,
  RQ_ERR_DEGENERATE_WINDOW = 17,
  RQ_ERR_NO_DISRUPTIONS = 18,
  RQ_ERR_EMPTY_SPAN = 19,
  RQ_ERR_EMPTY_INPUT = 20,
  RQ_ERR_LENGTH_MISMATCH = 21,
  RQ_ERR_ZERO_VARIANCE = 22,
  RQ_ERR_TOO_FEW_POINTS = 23,
  RQ_ERR_NUMERICAL_NON_CONVERGENCE = 24,
  RQ_ERR_OVERLAPPING_DISRUPTIONS = 25,
  RQ_ERR_LOSS_EXCEEDS_BASELINE = 26,
  RQ_ERR_INVALID_SPEC = 27,
  RQ_ERR_IO_FAILURE = 28,
  RQ_ERR_NO_OVERLAP = 29,
  RQ_ERR_INTERNAL = 30
} rq_status;

/* Counterfactual baseline families. AUTO selects COVARIATE when a covariate
 * file is given, LOGISTIC otherwise. SUPPLIED uses an expected-performance
 * series verbatim and skips model fitting. */
typedef enum rq_baseline_kind {
  RQ_BASELINE_AUTO = 0,
  RQ_BASELINE_COVARIATE = 1,
  RQ_BASELINE_LOGISTIC = 2,
  RQ_BASELINE_ETS = 3,
  RQ_BASELINE_SUPPLIED = 4
} rq_baseline_kind;

/* Integration span for the resilience index: the contiguous stretch from
 * the first disruption to the last recovery, or disruption windows only. */
typedef enum rq_span_mode {
  RQ_SPAN_CONTIGUOUS = 0,
  RQ_SPAN_WINDOWS = 1
} rq_span_mode;

/* Rate used by the adaptability index. RECOVERY restricts to disruptions
 * whose recovery was observed. */
typedef enum rq_rho_basis {
  RQ_RHO_DISRUPTION = 0,
  RQ_RHO_RECOVERY = 1
} rq_rho_basis;

typedef struct rq_series rq_series;

RESILQ_API const char* rq_version(void);

/* Message for the most recent error on this thread. Never NULL; empty
 * string when no error has occurred. Overwritten by the next failure. */
RESILQ_API const char* rq_last_error(void);

RESILQ_API const char* rq_status_name(rq_status status);

RESILQ_API void rq_string_free(char* s);

/* ---- monthly performance series ---------------------------------- */

/* CSV layout: header `month,value[,label]`, months formatted YYYY-MM,
 * `.` decimal separator, lines starting with `#` ignored. Rows may appear
 * out of order; the month sequence must be gap-free after sorting. */
RESILQ_API rq_status rq_series_parse(const char* csv_text, rq_series** out);
RESILQ_API rq_status rq_series_load(const char* path, rq_series** out);
RESILQ_API void rq_series_free(rq_series* s);

RESILQ_API int32_t rq_series_length(const rq_series* s);
RESILQ_API rq_status rq_series_start(const rq_series* s, int32_t* year, int32_t* month);
RESILQ_API double rq_series_value(const rq_series* s, int32_t index);
RESILQ_API const char* rq_series_label(const rq_series* s);

/* Trailing moving average, shortened at the left edge. window >= 1. */
RESILQ_API rq_status rq_series_moving_average(const rq_series* s, int32_t window,
                                              rq_series** out);

/* Divide by the value at index 0 so the origin equals 1 exactly. */
RESILQ_API rq_status rq_series_normalize(const rq_series* s, rq_series** out);

/* Split into months < cutoff and months >= cutoff. The cutoff must lie
 * strictly inside the series range. */
RESILQ_API rq_status rq_series_split(const rq_series* s, int32_t cutoff_year,
                                     int32_t cutoff_month, rq_series** pre,
                                     rq_series** post);

/* ---- disruption curve primitives ---------------------------------- */

/* Loss at time t of a disruption starting at `start` with the given
 * amplitude, shapes and duration. Zero outside the open support. The peak
 * over t equals alpha exactly. */
RESILQ_API double rq_beta_loss(double alpha, double theta, double vartheta,
                               double duration, double start, double t);

/* Closed-form integral of the loss curve over its support. */
RESILQ_API double rq_beta_loss_integral(double alpha, double theta,
                                        double vartheta, double duration);

/* Adaptability index from n ordered per-disruption rates. n = 1 gives 1. */
RESILQ_API rq_status rq_adaptability_from_rates(const double* rates, int32_t n,
                                                double* rho);

/* ---- statistics ---------------------------------------------------- */

RESILQ_API rq_status rq_pearson(const double* x, const double* y, int32_t n,
                                double* coefficient, double* p_value);

RESILQ_API rq_status rq_group_mean_ci(const double* values, int32_t n,
                                      double* mean, double* ci_low,
                                      double* ci_high);

/* ---- pipeline ------------------------------------------------------ */

typedef struct rq_analyze_options {
  int32_t smoothing_window;   /* default 3 */
  int32_t min_duration;       /* months, default 3 */
  double min_peak_ratio;      /* default 0.05 */
  double segment_penalty;     /* < 0 selects the automatic penalty */
  int32_t baseline;           /* rq_baseline_kind, default AUTO */
  int32_t span_mode;          /* rq_span_mode, default CONTIGUOUS */
  int32_t rho_basis;          /* rq_rho_basis, default DISRUPTION */
  double rho_threshold;       /* default 0.5 */
  double r_threshold;         /* default 0.7 */
  int32_t cutoff_year;        /* required: first month of the disrupted period */
  int32_t cutoff_month;
  const char* label;          /* optional; overrides the CSV label */
} rq_analyze_options;

RESILQ_API void rq_analyze_options_init(rq_analyze_options* options);

/* Run the full pipeline on an observed-series CSV and write report.json
 * (and optionally an SVG chart). covariates_csv supplies
 * `month,physicians,population`; expected_csv supplies the baseline
 * directly (RQ_BASELINE_SUPPLIED). Returns RQ_OK, or RQ_ERR_FIT_FAILED
 * when some disruption fits failed but a partial report was written. */
RESILQ_API rq_status rq_analyze_file(const char* observed_csv,
                                     const char* covariates_csv,
                                     const char* expected_csv,
                                     const rq_analyze_options* options,
                                     const char* report_path,
                                     const char* plot_path);

/* Same pipeline, returning the report as a JSON string (rq_string_free). */
RESILQ_API rq_status rq_analyze_to_json(const char* observed_csv,
                                        const char* covariates_csv,
                                        const char* expected_csv,
                                        const rq_analyze_options* options,
                                        char** json_out);

/* Generate a synthetic scenario from a JSON spec and write observed.csv,
 * expected.csv, covariate.csv and truth.json into out_dir. */
RESILQ_API rq_status rq_synth_run(const char* spec_json_path, const char* out_dir);

/* Analyze every row of a manifest CSV (`label,observed_path[,covariate_path]`,
 * paths relative to the manifest) and write per-label reports plus
 * groups.json (and optionally rankings.svg) into out_dir. Row failures are
 * recorded in the summary; the batch continues. */
RESILQ_API rq_status rq_batch_run(const char* manifest_csv, const char* out_dir,
                                  const rq_analyze_options* options,
                                  int32_t write_rankings_plot);

/* Join two wide CSVs (`unit,<name>...`) on `unit` and write a JSON table of
 * Pearson {coefficient, p} per (left column, right column) pair. */
RESILQ_API rq_status rq_correlate_run(const char* indices_csv,
                                      const char* covariates_csv,
                                      const char* out_json_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RESILQ_H */
