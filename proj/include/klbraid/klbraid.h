#ifndef KLBRAID_H
#define KLBRAID_H

/* C interface to the klbraid library. Every function returns a klb_status; on failure
 * klb_last_error() describes the problem for the calling thread. Handles are opaque and
 * released with the matching *_free function. Strings returned through out-parameters
 * are owned by the handle they came from and stay valid until it is freed. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KLB_API __declspec(dllexport)
#else
#define KLB_API __attribute__((visibility("default")))
#endif

typedef enum klb_status {
  KLB_OK = 0,
  KLB_INVALID_ARGUMENT = 1,
  KLB_INSUFFICIENT_DATA = 2,
  KLB_IO_ERROR = 3,
  KLB_PARSE_ERROR = 4,
  KLB_INTERNAL_ERROR = 5
} klb_status;

typedef struct klb_context klb_context;
typedef struct klb_graph klb_graph;
typedef struct klb_poly klb_poly;
typedef struct klb_report klb_report;

KLB_API const char* klb_last_error(void);
KLB_API const char* klb_status_name(klb_status s);

/* cache_dir may be NULL (in-memory only). Records found there are loaded immediately and
 * the process-wide table is written back by klb_context_save and klb_context_free. */
KLB_API klb_status klb_context_new(const char* cache_dir, klb_context** out);
KLB_API klb_status klb_context_save(klb_context* ctx);
KLB_API void klb_context_free(klb_context* ctx);
/* Reports carry a timing_ms field when enabled (off by default). */
KLB_API klb_status klb_context_set_timing(klb_context* ctx, int enabled);

KLB_API klb_status klb_graph_new(int num_vertices, klb_graph** out);
KLB_API klb_status klb_graph_add_edge(klb_graph* g, int u, int v);
/* JSON {"n": k, "edges": [[u,v],...]} or whitespace-separated edge lines. */
KLB_API klb_status klb_graph_parse(const char* text, klb_graph** out);
KLB_API klb_status klb_graph_load(const char* path, klb_graph** out);
KLB_API klb_status klb_graph_cone(const klb_graph* g, int n, klb_graph** out);
KLB_API int klb_graph_num_vertices(const klb_graph* g);
KLB_API void klb_graph_free(klb_graph* g);

KLB_API klb_status klb_kl_braid(klb_context* ctx, int n, klb_poly** out);
KLB_API klb_status klb_kl_graph(klb_context* ctx, const klb_graph* g, klb_poly** out);
KLB_API size_t klb_poly_num_coeffs(const klb_poly* p);
/* Decimal string of the coefficient of t^i; "0" past the degree. */
KLB_API const char* klb_poly_coeff(const klb_poly* p, size_t i);
KLB_API void klb_poly_free(klb_poly* p);

KLB_API klb_status klb_cmd_kl_braid(klb_context* ctx, int n, klb_report** out);
/* cone < 0 means no cone extension. */
KLB_API klb_status klb_cmd_kl_graph(klb_context* ctx, const klb_graph* g, int cone, klb_report** out);
KLB_API klb_status klb_cmd_eqkl(klb_context* ctx, int n, klb_report** out);
/* g may be NULL for the braid matroid. */
KLB_API klb_status klb_cmd_e1(klb_context* ctx, int i, int n, const klb_graph* g, klb_report** out);
KLB_API klb_status klb_cmd_genfun(klb_context* ctx, int i, int max_n, int fit, int asymptotics, klb_report** out);
KLB_API klb_status klb_cmd_verify(klb_context* ctx, const char* suite, klb_report** out);

/* Pretty-printed JSON document. */
KLB_API const char* klb_report_json(const klb_report* r);
/* Tabular view; empty string when the command has none. */
KLB_API const char* klb_report_csv(const klb_report* r);
/* 1 passed, 0 failed, -1 when the command verifies nothing. */
KLB_API int klb_report_passed(const klb_report* r);
KLB_API void klb_report_free(klb_report* r);

/* Number of verify suite names, and the i-th name ("all" is last). */
KLB_API size_t klb_verify_suite_count(void);
KLB_API const char* klb_verify_suite_name(size_t i);

#ifdef __cplusplus
}
#endif

#endif
