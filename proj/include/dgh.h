#ifndef DGH_H
#define DGH_H

/*
 * C API of the digraph homotopy toolkit.
 *
 * Digraphs and digraph maps are opaque handles created from the JSON
 * documents described in the README ({"vertices": [...], "edges": [...]}
 * and {"domain": ..., "codomain": ..., "map": {...}}).  Every function
 * returns a status code; on failure dgh_last_error() holds a thread-local
 * message.  Strings returned through char** are heap-allocated and must be
 * released with dgh_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32
#define DGH_API __declspec(dllexport)
#else
#define DGH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dgh_digraph dgh_digraph;
typedef struct dgh_map dgh_map;

typedef enum dgh_status {
  DGH_OK = 0,
  DGH_ERR_PARSE = 1,      /* malformed JSON or DOT input */
  DGH_ERR_INVALID = 2,    /* input violates a digraph/map invariant */
  DGH_ERR_DOMAIN = 3,     /* mismatched domains/codomains */
  DGH_ERR_UNSUPPORTED = 4,/* unknown kind or option */
  DGH_ERR_LIMIT = 5,      /* a configured cap was exceeded */
  DGH_ERR_IO = 6,         /* file reference could not be read */
  DGH_ERR_INTERNAL = 7
} dgh_status;

DGH_API const char* dgh_version(void);
DGH_API const char* dgh_last_error(void);
DGH_API void dgh_string_free(char* text);

/* --- handles --------------------------------------------------------- */

/* base_dir (nullable) resolves relative file references inside documents. */
DGH_API dgh_status dgh_digraph_parse(const char* json, const char* base_dir,
                                     dgh_digraph** out);
DGH_API dgh_status dgh_digraph_json(const dgh_digraph* g, int indent, char** out);
DGH_API void dgh_digraph_free(dgh_digraph* g);
DGH_API size_t dgh_digraph_vertex_count(const dgh_digraph* g);
DGH_API size_t dgh_digraph_edge_count(const dgh_digraph* g);
DGH_API int dgh_digraph_equal(const dgh_digraph* a, const dgh_digraph* b);

DGH_API dgh_status dgh_map_parse(const char* json, const char* base_dir, dgh_map** out);
DGH_API dgh_status dgh_map_json(const dgh_map* f, int indent, char** out);
DGH_API void dgh_map_free(dgh_map* f);

/* --- constructions ---------------------------------------------------- */

/*
 * kind: "cone" (digraph input), "cylinder", "mod-cylinder", "mod-cone",
 * "mod-mapping-cone" (map input), "tube", "tube-decomposition" (two maps),
 * "s-digraph" (two digraphs).  Unused arguments may be NULL.
 * options_json (nullable): {"gh_override": {"<vertex>": "<preimage>"}}.
 *
 * The result document carries the digraph, the canonical maps, the g_h
 * choice table when applicable, and for the decomposition the three parts.
 */
DGH_API dgh_status dgh_build(const char* kind, const dgh_digraph* g, const dgh_digraph* h,
                             const dgh_map* f, const dgh_map* f2, const char* options_json,
                             int indent, char** out_json);

/* --- homology ---------------------------------------------------------- */

/* {"kind": "cohomology"|"homology", "pmax": p, "groups": [{"degree","rank","torsion"}...]} */
DGH_API dgh_status dgh_homology(const dgh_digraph* g, int pmax, int dual, int indent,
                                char** out_json);

/* Induced cochain maps of f per degree, with source/target groups. */
DGH_API dgh_status dgh_induced(const dgh_map* f, int pmax, int indent, char** out_json);

/* --- homotopy ----------------------------------------------------------- */

DGH_API dgh_status dgh_homotopic(const dgh_map* f, const dgh_map* g, uint64_t budget,
                                 int indent, char** out_json);
DGH_API dgh_status dgh_contractible(const dgh_digraph* g, uint64_t budget, int indent,
                                    char** out_json);
DGH_API dgh_status dgh_equivalent(const dgh_digraph* g, const dgh_digraph* h, uint64_t budget,
                                  int indent, char** out_json);
/* homotopy_json is the {"word","frames",...} document. */
DGH_API dgh_status dgh_verify_homotopy(const char* homotopy_json, const char* base_dir,
                                       int indent, char** out_json);
/* request: {"map": <map doc>, "sub": <digraph doc>, "homotopy": <homotopy doc>} */
DGH_API dgh_status dgh_hep_search(const char* request_json, const char* base_dir, int indent,
                                  char** out_json);

/* --- verification suites ------------------------------------------------ */

/*
 * check: "all", "triviality", "additivity", "mv", "cochain", "cone",
 * "four-term", "tube".  degree 1 is normative; degree 2 experimental.
 * Emits NDJSON: one compact report object per line plus a final summary
 * line.  *failures receives the number of failed checks (may be NULL).
 */
DGH_API dgh_status dgh_verify(const char* check, uint64_t seed, int count, int min_size,
                              int max_size, int degree, int* failures, char** out_json);

/* --- DOT ----------------------------------------------------------------- */

DGH_API dgh_status dgh_import_dot(const char* dot_text, int indent, char** digraph_json);
DGH_API dgh_status dgh_export_dot(const dgh_digraph* g, char** dot_text);

#ifdef __cplusplus
}
#endif

#endif /* DGH_H */
