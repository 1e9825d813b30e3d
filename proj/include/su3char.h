/* C interface to the su3char library.
 *
 * Every function returns an su3_status; on failure su3_last_error() describes
 * the problem (thread-local, valid until the next call on the same thread).
 * Torus points are angle triples theta[3] summing to zero. Weights are Dynkin
 * labels (a, b).
 */
#ifndef SU3CHAR_H
#define SU3CHAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SU3_API __declspec(dllexport)
#else
#define SU3_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum su3_status {
  SU3_OK = 0,
  SU3_ERR_INVALID_ARGUMENT = 1,
  SU3_ERR_SINGULAR = 2,
  SU3_ERR_RESOURCE = 3,
  SU3_ERR_NONCONVERGENCE = 4,
  SU3_ERR_IO = 5,
  SU3_ERR_INVARIANT = 6,
  SU3_ERR_INTERNAL = 7
} su3_status;

typedef enum su3_method {
  SU3_METHOD_AUTO = 0,
  SU3_METHOD_WEYL = 1,
  SU3_METHOD_DESCENT = 2,
  SU3_METHOD_SCHUR = 3
} su3_method;

SU3_API const char* su3_last_error(void);
SU3_API const char* su3_status_name(su3_status status);
SU3_API const char* su3_version(void);

/* 0 restores automatic selection (SU3_THREADS, then the hardware). */
SU3_API void su3_set_threads(unsigned threads);
SU3_API unsigned su3_threads(void);

typedef struct su3_char_value {
  double re;
  double im;
  su3_method method; /* the evaluator actually used */
  int wall;          /* descent wall, -1 otherwise */
  double condition;  /* 1 / smallest divisor wall norm; +inf if none */
} su3_char_value;

SU3_API su3_status su3_dim(int64_t a, int64_t b, int64_t* out);
/* wall is only read for SU3_METHOD_DESCENT. */
SU3_API su3_status su3_chi(int64_t a, int64_t b, const double theta[3], su3_method method, int wall, su3_char_value* out);
SU3_API su3_status su3_fold_to_alcove(const double theta_in[3], double theta_out[3], size_t* steps);

SU3_API su3_status su3_envelope(int64_t a, int64_t b, const double theta[3], double* min_form, double* product_form,
                        double per_weyl_terms[6]);
SU3_API su3_status su3_c_of_H(const double theta[3], double* out);
SU3_API su3_status su3_pointwise_bound(int64_t a, int64_t b, const double theta[3], double* bound, double* previous);
SU3_API su3_status su3_rank1_margin(int64_t n, double theta, double* out);

SU3_API su3_status su3_predicted_singular(int64_t a, int64_t b, double p, double* out);
SU3_API su3_status su3_predicted_regular(int64_t a, int64_t b, double p, double* out);
SU3_API su3_status su3_predicted_dimension(int64_t a, int64_t b, double p, double* out);
SU3_API su3_status su3_I_bound(double p, double a, double b, double c, double* out);

typedef struct su3_quadrature {
  int base_order;
  int max_refinements;
  double rel_tol;
  int subdivision; /* 0 = automatic */
  uint64_t max_evaluations;
} su3_quadrature;

SU3_API void su3_quadrature_default(su3_quadrature* spec);

/* Passing NULL for spec uses the defaults. */
SU3_API su3_status su3_I_numeric(double p, double a, double b, double c, const su3_quadrature* spec, double* value,
                         int* converged);

/* ---- reports ---------------------------------------------------------- */

/* A finished run: a JSON summary, a table of records, and a verdict. */
typedef struct su3_report su3_report;

typedef enum su3_grid_kind { SU3_GRID_STRATIFIED = 0, SU3_GRID_ALPHA0_WALL = 1 } su3_grid_kind;

typedef struct su3_sweep_config {
  int dense_shell;
  int max_shell;
  int stride;
  su3_grid_kind grid;
  size_t points;
  uint64_t seed;
  uint64_t max_evaluations;
  int keep_all_records; /* table holds every record instead of per-weight maxima */
  double shell_slack;   /* verdict requires shell ratio <= shell_slack */
} su3_sweep_config;

SU3_API void su3_sweep_config_default(su3_sweep_config* config);

typedef enum su3_family { SU3_FAMILY_AXIS = 0, SU3_FAMILY_DIAGONAL = 1, SU3_FAMILY_FIXED_B = 2 } su3_family;

SU3_API su3_status su3_run_sweep(const su3_sweep_config* config, su3_report** out);
SU3_API su3_status su3_run_lp(int64_t a, int64_t b, const double* p, size_t count, const su3_quadrature* spec,
                      su3_report** out);
SU3_API su3_status su3_run_scaling(su3_family family, int64_t b0, double p, const int64_t* n_values, size_t count,
                           const su3_quadrature* spec, su3_report** out);
SU3_API su3_status su3_run_prop(double p, const double* magnitudes, size_t count, double shell_limit,
                        const su3_quadrature* spec, su3_report** out);
SU3_API su3_status su3_run_rank1(int64_t n_max, size_t grid, su3_report** out);
SU3_API su3_status su3_run_oracle_diff(int64_t max_label, size_t points, uint64_t seed, su3_report** out);
/* One row per point; theta is n x 3 row-major. */
SU3_API su3_status su3_run_eval(int64_t a, int64_t b, const double* theta, size_t n, su3_method method, int wall,
                        su3_report** out);

/* SU3_OK, SU3_ERR_NONCONVERGENCE or SU3_ERR_INVARIANT. */
SU3_API su3_status su3_report_verdict(const su3_report* report);
SU3_API const char* su3_report_command(const su3_report* report);
/* Summary JSON, pretty-printed; owned by the report. */
SU3_API const char* su3_report_summary(const su3_report* report);
SU3_API size_t su3_report_rows(const su3_report* report);
/* Numeric summary field by JSON pointer, e.g. "/c_emp" or "/fit/slope".
 * Booleans read as 0 or 1. */
SU3_API su3_status su3_report_get(const su3_report* report, const char* pointer, double* out);
/* config_json is echoed into the file header; NULL means {}. */
SU3_API su3_status su3_report_write_csv(const su3_report* report, const char* path, const char* config_json);
SU3_API su3_status su3_report_write_json(const su3_report* report, const char* path, const char* config_json);
SU3_API void su3_report_free(su3_report* report);

#ifdef __cplusplus
}
#endif

#endif
