/* loopex C API. All strings returned by the library are owned by the caller
   and released with loopex_string_free. */
#ifndef LOOPEX_H
#define LOOPEX_H

#include <stddef.h>

#if defined(LOOPEX_BUILDING_LIBRARY)
#define LOOPEX_API __attribute__((visibility("default")))
#else
#define LOOPEX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum loopex_status {
  LOOPEX_OK = 0,
  LOOPEX_INVALID_ARGUMENT,
  LOOPEX_PARSE_ERROR,
  LOOPEX_VARIABLE_MISMATCH,
  LOOPEX_PARAMETER_MISMATCH,
  LOOPEX_PRECONDITION,
  LOOPEX_NOT_EXACT,
  LOOPEX_OVERFLOW,
  LOOPEX_SCHEMA,
  LOOPEX_UNKNOWN_KNOT,
  LOOPEX_IO,
  LOOPEX_INTERNAL
} loopex_status;

typedef struct loopex_context loopex_context;
typedef struct loopex_report loopex_report;

LOOPEX_API const char* loopex_version(void);
LOOPEX_API const char* loopex_status_name(loopex_status status);

LOOPEX_API loopex_context* loopex_context_new(void);
LOOPEX_API void loopex_context_free(loopex_context* ctx);
/* Message of the last failed call on ctx; empty string if none. Owned by ctx. */
LOOPEX_API const char* loopex_last_error(const loopex_context* ctx);
/* Parse a corpus file; NULL or "" checks the embedded corpus. Writes the record count. */
LOOPEX_API loopex_status loopex_load_corpus(loopex_context* ctx, const char* path, size_t* count);

/* config_json: {"command": ..., "knots": [...], "order": ..., ...}. */
LOOPEX_API loopex_status loopex_run_command(loopex_context* ctx, const char* config_json, loopex_report** out);
LOOPEX_API int loopex_report_exit_status(const loopex_report* report);
/* format: "json", "tsv" or "text". */
LOOPEX_API loopex_status loopex_report_render(loopex_context* ctx, const loopex_report* report, const char* format,
                                              char** out);
LOOPEX_API loopex_status loopex_report_timing_json(loopex_context* ctx, const loopex_report* report, char** out);
LOOPEX_API void loopex_report_free(loopex_report* report);

/* Braid words are comma or space separated signed generators, e.g. "1,1,1". */
LOOPEX_API loopex_status loopex_alexander(loopex_context* ctx, const char* braid, char** out);
/* Colored Jones J_alpha as an hbar series mod hbar^(order+1). */
LOOPEX_API loopex_status loopex_colored_jones(loopex_context* ctx, const char* braid, int alpha, size_t order,
                                              char** out);

LOOPEX_API void loopex_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
