#ifndef CANONBASIS_CANONBASIS_H
#define CANONBASIS_CANONBASIS_H

/*
 * C interface to the canonical invariant basis library.
 *
 * Every function returning cb_status reports failures through the status
 * code; cb_last_error() then describes the failure on the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * cb_string_free(). Handles are released with their *_free function.
 */

#include <stdint.h>

#if defined(_WIN32)
#define CB_API __declspec(dllexport)
#else
#define CB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cb_status {
  CB_OK = 0,
  CB_VERIFICATION_FAILED = 1,
  CB_USAGE_ERROR = 2,
  CB_INTERNAL_ERROR = 3
} cb_status;

typedef struct cb_result cb_result;
typedef struct cb_report cb_report;

/* Called before each degree: 1-based basis index, rank, degree. */
typedef void (*cb_progress_fn)(int index, int rank, int degree, void* user_data);

typedef struct cb_options {
  unsigned threads;      /* worker count hint, >= 1 */
  uint64_t seed;         /* randomized sampling and checks */
  int heavy_ok;          /* required to canonicalize or verify E8 */
  int full_checks;       /* symbolic Jacobian division chain (rank <= 6) */
  int invariance;        /* -1: automatic, 0: skip, 1: always check q invariance */
  cb_progress_fn progress;
  void* user_data;
} cb_options;

CB_API const char* cb_version(void);
CB_API const char* cb_last_error(void);
CB_API void cb_options_init(cb_options* options);
CB_API void cb_string_free(char* text);

/* Group catalog. */
CB_API int cb_group_count(void);
CB_API const char* cb_group_name(int index);
CB_API cb_status cb_group_to_json(const char* group, char** out);
CB_API cb_status cb_group_to_text(const char* group, char** out);
CB_API cb_status cb_roots_to_json(const char* group, char** out);
CB_API cb_status cb_roots_to_text(const char* group, char** out);
CB_API cb_status cb_basis_to_json(const char* group, char** out);
CB_API cb_status cb_basis_to_text(const char* group, char** out);

/* Canonicalization. */
CB_API cb_status cb_canonicalize(const char* group, const cb_options* options, cb_result** out);
CB_API cb_status cb_result_from_json(const char* json, cb_result** out);
CB_API cb_status cb_result_to_json(const cb_result* result, int include_h_poly, char** out);
CB_API cb_status cb_result_to_text(const cb_result* result, char** out);
CB_API const char* cb_result_group(const cb_result* result);
CB_API cb_status cb_normalization_to_json(const cb_result* result, char** out);
CB_API cb_status cb_normalization_to_text(const cb_result* result, char** out);
/* Per-degree statistics with wall-clock times; empty for results read from JSON. */
CB_API cb_status cb_result_stats_text(const cb_result* result, char** out);
CB_API void cb_result_free(cb_result* result);

/* Verification. Returns CB_VERIFICATION_FAILED (with a report) when a
   check fails. */
CB_API cb_status cb_verify(const cb_result* result, const cb_options* options, cb_report** out);
CB_API int cb_report_passed(const cb_report* report);
CB_API cb_status cb_report_to_json(const cb_report* report, char** out);
CB_API cb_status cb_report_to_text(const cb_report* report, char** out);
/* Per-check wall-clock times. */
CB_API cb_status cb_report_timings_text(const cb_report* report, char** out);
CB_API void cb_report_free(cb_report* report);

#ifdef __cplusplus
}
#endif

#endif
