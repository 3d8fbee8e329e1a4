/* C interface of the entropy-stable DG solver library. */
#ifndef ESDG_ESDG_H
#define ESDG_ESDG_H

#include <stddef.h>

#if defined(_WIN32)
#define ESDG_API __declspec(dllexport)
#else
#define ESDG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum esdg_status {
  ESDG_OK = 0,
  ESDG_ERR_ARGUMENT = 1,     /* null handle, bad index, buffer too small */
  ESDG_ERR_CONFIG = 2,       /* invalid or unknown configuration */
  ESDG_ERR_DEGREE = 3,       /* unsupported polynomial degree */
  ESDG_ERR_SHAPE = 4,        /* array length mismatch */
  ESDG_ERR_NONPHYSICAL = 5,  /* nonpositive density or temperature */
  ESDG_ERR_INTEGRATION = 6,  /* step size underflow */
  ESDG_ERR_IO = 7,
  ESDG_ERR_INTERNAL = 8
} esdg_status;

typedef struct esdg_config esdg_config;
typedef struct esdg_report esdg_report;
typedef struct esdg_solver esdg_solver;

/* Message of the most recent failing call on this thread ("" if none). */
ESDG_API const char* esdg_last_error(void);
ESDG_API const char* esdg_build_id(void);
ESDG_API const char* esdg_status_name(esdg_status s);

/* Configuration.  case_name: run, mms, entropy-audit, heatflux-audit, blast, selftest. */
ESDG_API esdg_status esdg_config_new(const char* case_name, esdg_config** out);
ESDG_API void esdg_config_free(esdg_config* cfg);
ESDG_API esdg_status esdg_config_load_file(esdg_config* cfg, const char* path);
ESDG_API esdg_status esdg_config_load_string(esdg_config* cfg, const char* json);
ESDG_API esdg_status esdg_config_set_p(esdg_config* cfg, int p);
/* Element counts: the grid sequence for mms and blast, otherwise per
   direction (a single value applies to every direction). */
ESDG_API esdg_status esdg_config_set_elements(esdg_config* cfg, const int* counts, size_t n);
ESDG_API esdg_status esdg_config_set_model(esdg_config* cfg, const char* model);
ESDG_API esdg_status esdg_config_set_beta0(esdg_config* cfg, double beta0);
ESDG_API esdg_status esdg_config_set_output(esdg_config* cfg, const char* dir);
/* Resolved configuration as JSON.  *needed receives the length including
   the terminating zero; buf may be null to query it. */
ESDG_API esdg_status esdg_config_to_json(const esdg_config* cfg, char* buf, size_t len, size_t* needed);

/* Cases. */
ESDG_API esdg_status esdg_run(const esdg_config* cfg, esdg_report** out);
ESDG_API void esdg_report_free(esdg_report* r);
ESDG_API int esdg_report_passed(const esdg_report* r);
ESDG_API double esdg_report_metric(const esdg_report* r);
ESDG_API const char* esdg_report_summary(const esdg_report* r);
ESDG_API size_t esdg_report_line_count(const esdg_report* r);
ESDG_API const char* esdg_report_line(const esdg_report* r, size_t i);
ESDG_API size_t esdg_report_file_count(const esdg_report* r);
ESDG_API const char* esdg_report_file(const esdg_report* r, size_t i);

/* Direct access to the semidiscretization of a configuration. */
typedef struct esdg_budget {
  double dSdt;
  double DT;
  double Xi;
  double boundary_data;
  double source;
  double residual;
} esdg_budget;

ESDG_API esdg_status esdg_solver_new(const esdg_config* cfg, esdg_solver** out);
ESDG_API void esdg_solver_free(esdg_solver* s);
ESDG_API size_t esdg_solver_size(const esdg_solver* s);
ESDG_API esdg_status esdg_solver_initial_state(const esdg_solver* s, double* q, size_t n);
ESDG_API esdg_status esdg_solver_rhs(const esdg_solver* s, const double* q, size_t n, double t, double* dqdt);
ESDG_API esdg_status esdg_solver_budget(const esdg_solver* s, const double* q, size_t n, double t, esdg_budget* out);

#ifdef __cplusplus
}
#endif

#endif
