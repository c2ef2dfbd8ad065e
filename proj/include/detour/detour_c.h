#ifndef DETOUR_C_H
#define DETOUR_C_H

/* C interface to the detour library. Functions return a dt_status; on failure
   dt_last_error() describes the problem for the calling thread. Strings returned through
   char** out-parameters are owned by the caller and released with dt_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dt_graph dt_graph;

typedef enum dt_status {
  DT_OK = 0,
  DT_ERR_REJECTED_LOOP = 1,
  DT_ERR_BAD_VERTEX,
  DT_ERR_TOO_LARGE,
  DT_ERR_BAD_GRAPH6,
  DT_ERR_BUDGET_EXCEEDED,
  DT_ERR_BAD_START,
  DT_ERR_REFUTED,
  DT_ERR_NOT_HYPOHAMILTONIAN,
  DT_ERR_BAD_MATCHING,
  DT_ERR_BAD_BLOCK,
  DT_ERR_BAD_BASE,
  DT_ERR_DROP_MISMATCH,
  DT_ERR_BAD_PARAMS,
  DT_ERR_EMPTY,
  DT_ERR_BAD_SEQUENCE,
  DT_ERR_UNREALIZABLE,
  DT_ERR_NOT_PATH_UNICYCLIC,
  DT_ERR_NOT_IN_CATALOG,
  DT_ERR_CORRUPT_CATALOG,
  DT_ERR_BAD_FORMAT,
  DT_ERR_IO = 100,
  DT_ERR_INTERNAL = 101
} dt_status;

typedef enum dt_mode { DT_MODE_CERTIFIED = 0, DT_MODE_WITNESSED = 1 } dt_mode;

const char* dt_last_error(void);
const char* dt_status_name(dt_status status);
void dt_string_free(char* s);

/* Graphs */
dt_status dt_graph_from_edges(int n, const int* endpoints, int edge_count, dt_graph** out);
dt_status dt_graph_from_graph6(const char* text, dt_graph** out);
/* graph6, or multigraph text that has no loops or parallel edges. */
dt_status dt_graph_parse(const char* text, dt_graph** out);
dt_status dt_graph_from_catalog(const char* name, const int* params, int param_count, dt_graph** out);
void dt_graph_free(dt_graph* g);
int dt_graph_order(const dt_graph* g);
int dt_graph_size(const dt_graph* g);
dt_status dt_graph_to_graph6(const dt_graph* g, char** out);

/* Detour profile; per_vertex (may be NULL) receives dt_graph_order(g) entries. */
dt_status dt_detour_order(const dt_graph* g, dt_mode mode, int* tau, int* per_vertex);
dt_status dt_is_cnd(const dt_graph* g, int* out);

/* JSON reports */
dt_status dt_analyze_json(const dt_graph* g, dt_mode mode, char** json);
/* DT_ERR_REFUTED still fills json with the refutation. */
dt_status dt_verify_block_json(const dt_graph* g, const char* kind, const int* distinguished, int count,
                               char** json);
/* base_dir resolves relative base files; base names not found as files are looked up in
   the catalog. DT_ERR_REFUTED when verification does not confirm the prediction. */
dt_status dt_construct_json(const char* recipe_text, const char* base_dir, int certify, char** json,
                            dt_graph** out_graph);
dt_status dt_catalog_json(const char* name, const int* params, int param_count, char** json);
dt_status dt_catalog_list_json(char** json);
/* drop < 0 and girth_min <= 0 mean unconstrained. */
dt_status dt_search_block_json(const char* kind, int min_order, int max_order, int drop, int bipartite,
                               int girth_min, char** json);
dt_status dt_search_cnd_json(int max_order, int prune, int override_limit, char** json);
dt_status dt_colour_json(const dt_graph* g, int n, int exact, char** json);

#ifdef __cplusplus
}
#endif

#endif /* DETOUR_C_H */
