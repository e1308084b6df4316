#pragma once

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SNC_API __declspec(dllexport)
#else
#define SNC_API __attribute__((visibility("default")))
#endif

typedef enum snc_status {
  SNC_OK = 0,
  SNC_PARSE_ERROR = 1,
  SNC_DOMAIN_ERROR = 2,
  SNC_SINGULAR_MATRIX = 3,
  SNC_IO_ERROR = 4,
  SNC_INVALID_ARGUMENT = 5,
  SNC_INTERNAL_ERROR = 6
} snc_status;

typedef enum snc_bark_support {
  SNC_BARK_AUTO = 0,
  SNC_BARK_WHOLE_COMPONENT = 1,
  SNC_BARK_TWIGS = 2
} snc_bark_support;

typedef struct snc_graph snc_graph;
typedef struct snc_surface snc_surface;
typedef struct snc_report snc_report;

/* Message of the last failing call on this thread; "" if none. Valid until the next call. */
SNC_API const char* snc_last_error(void);
SNC_API const char* snc_status_name(snc_status s);
SNC_API const char* snc_version(void);

/* Every char** output is heap-allocated and must be released with snc_string_free. */
SNC_API void snc_string_free(char* s);

/* Weighted dual graphs. */
SNC_API snc_status snc_graph_from_file(const char* path, snc_graph** out);
SNC_API snc_status snc_graph_from_text(const char* text, snc_graph** out);
SNC_API void snc_graph_destroy(snc_graph* g);
SNC_API snc_status snc_graph_vertex_count(const snc_graph* g, size_t* out);
SNC_API snc_status snc_graph_serialize(const snc_graph* g, char** out);

/* d = det(-Q) on the given support (all vertices when support is NULL), as a decimal string. */
SNC_API snc_status snc_graph_discriminant(const snc_graph* g, const char* const* support, size_t support_len,
                                          char** out);
/* JSON {"bark": {id: "p/q"}, "sharp": {id: "p/q"}, "residuals": {id: "p/q"}}. */
SNC_API snc_status snc_graph_bark(const snc_graph* g, snc_bark_support kind, char** out);
/* "NegativeDefinite", "X", "H", "Y(a,b,c)" or "Other". */
SNC_API snc_status snc_graph_classify(const snc_graph* g, char** out);
/* *valid is 1 or 0; out is JSON {"valid", "trace": [{"vertex", "neighbors"}], "multiplicities": {id: n}}. */
SNC_API snc_status snc_graph_fiber_check(const snc_graph* g, int* valid, char** out);
/* Cokernel of Q as abelian group: JSON {"invariant_factors": ["3"], "free_rank": 0, "torsion": "Z3"}. */
SNC_API snc_status snc_graph_mumford(const snc_graph* g, char** out);
SNC_API snc_status snc_graph_dot(const snc_graph* g, char** out);

/* Arrangement programs (curve / blowup lines) and the resulting lattice. */
SNC_API snc_status snc_surface_from_file(const char* path, snc_surface** out);
SNC_API snc_status snc_surface_from_text(const char* text, snc_surface** out);
SNC_API void snc_surface_destroy(snc_surface* s);
/* JSON {"rank", "canonical", "canonical_square", "classes": [{"name", "class", "self"}]}. */
SNC_API snc_status snc_surface_summary(const snc_surface* s, char** out);
SNC_API snc_status snc_surface_boundary_graph(const snc_surface* s, const char* const* names, size_t n,
                                              snc_graph** out);

/* target: "y244", "y333", "cases" or "all". */
SNC_API snc_status snc_verify(const char* target, const char* fixture_dir, snc_report** out);
SNC_API void snc_report_destroy(snc_report* r);
SNC_API snc_status snc_report_counts(const snc_report* r, size_t* passed, size_t* total);
SNC_API snc_status snc_report_text(const snc_report* r, char** out);
SNC_API snc_status snc_report_json(const snc_report* r, char** out);

#ifdef __cplusplus
}
#endif
