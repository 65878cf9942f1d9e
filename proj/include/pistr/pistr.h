#ifndef PISTR_PISTR_H
#define PISTR_PISTR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PISTR_API __declspec(dllexport)
#elif defined(__GNUC__)
#define PISTR_API __attribute__((visibility("default")))
#else
#define PISTR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Product-irregular edge labelings.
 *
 * Every call returns a pistr_status. On failure the message of the most
 * recent error on the calling thread is available from pistr_last_error().
 * Strings handed out by the library are released with pistr_string_free().
 * Vertex ids are 0-based in this API and 1-based in documents and reports.
 */

typedef enum pistr_status {
  PISTR_OK = 0,
  PISTR_ERR_NULL_ARG = 1,
  PISTR_ERR_INVALID_ARGUMENT = 2,
  PISTR_ERR_PARSE = 3,
  PISTR_ERR_PRECONDITION = 4,
  PISTR_ERR_BUDGET = 5,
  PISTR_ERR_UNSUPPORTED = 6,
  PISTR_ERR_INTERNAL = 7
} pistr_status;

typedef struct pistr_graph pistr_graph;   /* graph, optionally labeled */
typedef struct pistr_matrix pistr_matrix; /* weighted adjacency matrix */

PISTR_API const char* pistr_status_name(pistr_status status);
PISTR_API const char* pistr_last_error(void);
/* 1-based line of the last parse error, 0 when the last error was not one. */
PISTR_API size_t pistr_last_error_line(void);
PISTR_API void pistr_string_free(char* s);
PISTR_API uint64_t pistr_default_node_budget(void);

/* ---- graphs ---- */

/* Parses "p n m" / "e u v [label]" text. */
PISTR_API pistr_status pistr_graph_parse(const char* text, pistr_graph** out);
PISTR_API pistr_status pistr_graph_complete(uint32_t n, pistr_graph** out);
PISTR_API pistr_status pistr_graph_union(const pistr_graph* a, const pistr_graph* b, pistr_graph** out);
/* Adds edge {u, v} in place. Any labeling is dropped. */
PISTR_API pistr_status pistr_graph_add_edge(pistr_graph* g, uint32_t u, uint32_t v);
PISTR_API pistr_status pistr_graph_emit(const pistr_graph* g, char** out);
PISTR_API uint32_t pistr_graph_vertex_count(const pistr_graph* g);
PISTR_API size_t pistr_graph_edge_count(const pistr_graph* g);
PISTR_API int pistr_graph_is_labeled(const pistr_graph* g);
PISTR_API void pistr_graph_free(pistr_graph* g);

/* ---- matrices ---- */

/*
 * Builds a block-diagonal matrix from '+'-separated block names:
 *   A<n> B<n> C<n>       the families M_n(1,2,3), M_n(2,3,1), M_n(3,1,2)
 *   ~A<n> ~B<n> ~C<n>    M_n(1,2,2), M_n(2,3,3), M_n(3,1,1)
 *   M<n>:x:y:z           M_n(x,y,z)
 *   L<n> Lp<n>           K_2 (resp. K_1) joined to B_n by one edge
 *   T T5 T5_TILDE ...    fixed matrices by name
 * followed by optional injections " @ P:i:j:w" (comma separated), where P is
 * 12, 13 or 23 and i, j are 1-based rows inside the two blocks. Injections
 * need exactly three blocks.
 */
PISTR_API pistr_status pistr_matrix_build(const char* expression, pistr_matrix** out);
/* Row-major order x order entries. */
PISTR_API pistr_status pistr_matrix_from_entries(const int64_t* entries, size_t order, pistr_matrix** out);
PISTR_API size_t pistr_matrix_order(const pistr_matrix* m);
PISTR_API pistr_status pistr_matrix_entry(const pistr_matrix* m, size_t i, size_t j, uint32_t* out);
PISTR_API pistr_status pistr_matrix_to_graph(const pistr_matrix* m, pistr_graph** out);
/* Space-separated rows, one per line. */
PISTR_API pistr_status pistr_matrix_format(const pistr_matrix* m, char** out);
PISTR_API void pistr_matrix_free(pistr_matrix* m);
/* Verdict from the matrix rows. `json` may be NULL. */
PISTR_API pistr_status pistr_matrix_check(const pistr_matrix* m, int* ok, char** json);

/* ---- verification and search ---- */

/* Needs a labeled graph. `json` may be NULL. */
PISTR_API pistr_status pistr_verify(const pistr_graph* g, int* ok, char** json);

typedef enum pistr_ps_method {
  PISTR_PS_AUTO = 0,      /* components when disconnected, else dfs */
  PISTR_PS_DFS = 1,       /* whole-graph depth-first search */
  PISTR_PS_COMPONENTS = 2 /* per-component signatures */
} pistr_ps_method;

typedef enum pistr_ps_status {
  PISTR_PS_EXACT = 0,
  PISTR_PS_ABOVE_LIMIT = 1,
  PISTR_PS_BUDGET_EXHAUSTED = 2
} pistr_ps_status;

typedef struct pistr_ps_options {
  uint32_t s_max;
  uint64_t node_budget;
  pistr_ps_method method;
  int pruning; /* dfs only; 0 checks labelings at the leaves */
} pistr_ps_options;

PISTR_API void pistr_ps_options_init(pistr_ps_options* options);

typedef struct pistr_ps_result {
  pistr_ps_status status;
  uint32_t value; /* ps when exact; strength being searched when out of budget */
  uint64_t nodes;
} pistr_ps_result;

/* `certificate` and `json` may be NULL. The certificate is set only for
   exact results. */
PISTR_API pistr_status pistr_ps(const pistr_graph* g, const pistr_ps_options* options, pistr_ps_result* result,
                                pistr_graph** certificate, char** json);

/* Minimum clique cover; *k is 0 when the cover number exceeds k_max. */
PISTR_API pistr_status pistr_cover(const pistr_graph* g, uint32_t k_max, uint32_t* k, char** json);

typedef struct pistr_construct_options {
  uint64_t seed;
  uint64_t node_budget;
} pistr_construct_options;

PISTR_API void pistr_construct_options_init(pistr_construct_options* options);

/* Labels a connected graph with clique cover number at most 3. */
PISTR_API pistr_status pistr_construct(const pistr_graph* g, const pistr_construct_options* options,
                                       pistr_graph** labeled, char** json);

#ifdef __cplusplus
}
#endif

#endif
