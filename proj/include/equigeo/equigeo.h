#ifndef EQUIGEO_EQUIGEO_H
#define EQUIGEO_EQUIGEO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define EGEO_API __declspec(dllexport)
#else
#define EGEO_API __attribute__((visibility("default")))
#endif

typedef enum egeo_status {
  EGEO_OK = 0,
  EGEO_ERR_INPUT = 1,          /* malformed JSON, schema or shape problems */
  EGEO_ERR_VERIFY = 2,         /* exact verification failed (invalid hint, non-invariant form, ...) */
  EGEO_ERR_NOT_APPLICABLE = 3, /* classifier hypotheses do not hold */
  EGEO_ERR_INTERNAL = 4
} egeo_status;

typedef enum egeo_format { EGEO_FORMAT_JSON = 0, EGEO_FORMAT_TEXT = 1 } egeo_format;

/* Opaque, immutable once created; safe for concurrent reads. */
typedef struct egeo_space egeo_space;

/* Builds a homogeneous space from its JSON specification. Relative algebra
   paths resolve against base_dir (may be NULL). options_json may be NULL or
   {"seed": n, "tolerance": x, "max_retries": k}. */
EGEO_API egeo_status egeo_space_create(const char* spec_json, const char* base_dir, const char* options_json,
                                       egeo_space** out);
EGEO_API void egeo_space_destroy(egeo_space* space);

/* Every report is returned as a NUL-terminated string owned by the caller and
   released with egeo_string_free. */
EGEO_API egeo_status egeo_decompose_report(const egeo_space* space, egeo_format format, char** out);

/* request: {"coords": [[...], ...], "samples": n, "seed": s, "format": "json"|"text"}; may be NULL. */
EGEO_API egeo_status egeo_metrics_report(const egeo_space* space, const char* request_json, char** out);

/* request: {"vectors": [[...], ...], "ambient": bool, "samples": n, "seed": s, "format": "json"|"text"}. */
EGEO_API egeo_status egeo_check_report(const egeo_space* space, const char* request_json, char** out);

EGEO_API egeo_status egeo_equations_report(const egeo_space* space, egeo_format format, char** out);

/* pi_k holds one-based simple-root indices. */
EGEO_API egeo_status egeo_troots_report(const char* type, int rank, const int* pi_k, size_t pi_k_count,
                                        egeo_format format, char** out);

/* request as for egeo_check_report, interpreted against the M-space. */
EGEO_API egeo_status egeo_mspace_report(const egeo_space* flag, const egeo_space* mspace, const char* request_json,
                                        char** out);

/* Echoed specification that rebuilds the same space. */
EGEO_API egeo_status egeo_space_spec(const egeo_space* space, char** out);

/* Message of the last failure on the calling thread ("" if none). */
EGEO_API const char* egeo_last_error(void);
EGEO_API void egeo_string_free(char* s);
EGEO_API const char* egeo_version(void);

#ifdef __cplusplus
}
#endif

#endif
