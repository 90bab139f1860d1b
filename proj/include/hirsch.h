/* C API for the Hirsch deformation toolkit.
 *
 * All functions are thread-compatible (no shared mutable state); handles are
 * opaque and immutable after creation. Functions returning strings allocate
 * with malloc; release them with hirsch_string_free. Fallible calls return a
 * hirsch_status and optionally a detail message through errmsg (also
 * malloc'd; pass NULL to ignore).
 */
#ifndef HIRSCH_H
#define HIRSCH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hirsch_status {
    HIRSCH_OK = 0,
    HIRSCH_E_PARSE = 1,
    HIRSCH_E_INVALID = 2,
    HIRSCH_E_MARK_NOT_VERTEX = 3,
    HIRSCH_E_UNBOUNDED = 4,
    HIRSCH_E_LOWDIM = 5,
    HIRSCH_E_NOT_SIMPLE = 6,
    HIRSCH_E_NOT_CANDIDATE = 7,
    HIRSCH_E_NOT_DANTZIG = 8,
    HIRSCH_E_NON_GENERIC = 9,
    HIRSCH_E_DEGENERATE = 10,
    HIRSCH_E_NO_CROSSING = 11,
    HIRSCH_E_PROTECTED_VERTEX = 12,
    HIRSCH_E_NOT_DANTZIG_AFTER = 13,
    HIRSCH_E_SEPARATION_FAILED = 14,
    HIRSCH_E_UNDEFORMABLE = 15,
    HIRSCH_E_ENDPOINT_LOST = 16,
    HIRSCH_E_SHAPE_MISMATCH = 17,
    HIRSCH_E_BUDGET_EXCEEDED = 18,
    HIRSCH_E_SAMPLER_EXHAUSTED = 19,
    HIRSCH_E_DISCONNECTED = 20,
    HIRSCH_E_BAD_ARGUMENT = 21,
    HIRSCH_E_INTERNAL = 22
} hirsch_status;

const char* hirsch_status_name(hirsch_status s);
const char* hirsch_version(void);
void hirsch_string_free(char* s);

/* A validated bounded full-dimensional irredundant H-polytope, together
 * with the optional marked vertex pair from its document. */
typedef struct hirsch_polytope hirsch_polytope;

/* Parses and validates a polytope document (JSON text). */
hirsch_status hirsch_polytope_parse(const char* text, hirsch_polytope** out, char** errmsg);
void hirsch_polytope_free(hirsch_polytope* p);

int hirsch_polytope_dim(const hirsch_polytope* p);
int hirsch_polytope_facets(const hirsch_polytope* p);
int hirsch_polytope_vertex_count(const hirsch_polytope* p);
int hirsch_polytope_is_simple(const hirsch_polytope* p);
int hirsch_polytope_has_marks(const hirsch_polytope* p);

/* Canonical serialization of the polytope (marks included when present). */
hirsch_status hirsch_polytope_document(const hirsch_polytope* p, char** json_out);

/* Vertex list with tight facet sets, in canonical (lexicographic) order. */
hirsch_status hirsch_vertices_json(const hirsch_polytope* p, char** json_out, char** errmsg);

/* Graph-diameter Hirsch bound: diameter <= n - d. */
hirsch_status hirsch_check_hirsch(const hirsch_polytope* p, int* holds, char** json_out,
                                  char** errmsg);

/* Non-revisiting path existence between two vertices. x and y are
 * comma-separated rational coordinates; pass NULL to use document marks.
 * budget caps the state search (0 means the default 10^7). */
hirsch_status hirsch_check_nonrevisiting(const hirsch_polytope* p, const char* x, const char* y,
                                         uint64_t budget, int* holds, char** json_out,
                                         char** errmsg);

/* All complementary vertex pairs of a (2d, d) simple polytope. */
hirsch_status hirsch_dantzig_find(const hirsch_polytope* p, char** json_out, char** errmsg);

/* Distance, number of geodesics and the maximum number of point-distinct
 * geodesics between two vertices. */
hirsch_status hirsch_geodesics_count(const hirsch_polytope* p, const char* x, const char* y,
                                     char** json_out, char** errmsg);

/* One fundamental deformation of the given facet. When the document carries
 * marks the deformation is performed as an FD of the Dantzig figure and the
 * marks are transported into the result document. */
hirsch_status hirsch_fd_apply(const hirsch_polytope* p, int facet, const char* step,
                              char** record_json_out, char** result_document_out, char** errmsg);

/* Goodness of the deformation: for the marked pair (all_pairs = 0, x/y
 * overriding document marks when non-NULL) or for every vertex pair
 * (all_pairs != 0). */
hirsch_status hirsch_fd_good(const hirsch_polytope* p, int facet, const char* step, int all_pairs,
                             const char* x, const char* y, int* good, char** json_out,
                             char** errmsg);

/* Verification campaign over sampled Dantzig figures. kind is "3geodesic"
 * or "strong-dantzig"; cache_path may be NULL. counterexamples receives the
 * number of certificates embedded in the report. */
hirsch_status hirsch_campaign_run(const char* kind, int d, int budget, uint64_t seed,
                                  const char* cache_path, char** report_json_out,
                                  int* counterexamples, char** errmsg);

/* Moduli-graph exploration by fundamental deformations. kind is "dantzig"
 * or "polytope"; n_facets applies to the polytope kind (0 means 2d);
 * n_seeds is the number of sampled seed figures (0 means 3). */
hirsch_status hirsch_moduli_explore(const char* kind, int d, int n_facets, int n_seeds,
                                    int budget, uint64_t seed, char** graph_json_out,
                                    char** errmsg);

/* Strongly connected components of an explored moduli graph document. */
hirsch_status hirsch_moduli_scc(const char* graph_json, int good_only, char** json_out,
                                char** errmsg);

/* Recomputes a counterexample certificate from its serialized data alone;
 * reproduced is set to 1 when the recorded failure reproduces. */
hirsch_status hirsch_certificate_verify(const char* cert_json, int* reproduced, char** errmsg);

#ifdef __cplusplus
}
#endif

#endif /* HIRSCH_H */
