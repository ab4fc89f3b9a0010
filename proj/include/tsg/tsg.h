#ifndef TSG_TSG_H
#define TSG_TSG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TSG_BUILDING_LIBRARY)
#    define TSG_API __declspec(dllexport)
#  else
#    define TSG_API __declspec(dllimport)
#  endif
#else
#  define TSG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tsg_status {
  TSG_OK = 0,
  TSG_ERR_INVALID_PARAMETER = 1,
  TSG_ERR_PARSE = 2,
  TSG_ERR_UNKNOWN_ELEMENT = 3,
  TSG_ERR_NOT_SUBGROUP = 4,
  TSG_ERR_NOT_NORMAL = 5,
  TSG_ERR_INVALID_ACTION = 6,
  TSG_ERR_CAPABILITY = 7,
  TSG_ERR_HYPOTHESIS_NOT_MET = 8,
  TSG_ERR_MISSING_RETRACTION = 9,
  TSG_ERR_INTERNAL = 10,
  TSG_ERR_IO = 11,
  TSG_ERR_NULL_ARGUMENT = 12,
  TSG_ERR_OUT_OF_MEMORY = 13
} tsg_status;

typedef struct tsg_group tsg_group;
typedef struct tsg_subset tsg_subset;
typedef struct tsg_digraph tsg_digraph;

/* Message for the most recent failure on the calling thread; "" after success. */
TSG_API const char* tsg_last_error(void);
TSG_API const char* tsg_status_name(tsg_status status);

/* Strings returned through char** are owned by the caller. */
TSG_API void tsg_string_free(char* s);

TSG_API tsg_status tsg_group_parse(const char* spec, tsg_group** out);
TSG_API void tsg_group_free(tsg_group* g);
TSG_API tsg_status tsg_group_order(const tsg_group* g, int* out);
TSG_API tsg_status tsg_group_label(const tsg_group* g, int element, char** out);
TSG_API tsg_status tsg_group_find(const tsg_group* g, const char* name, int* out);

/* The subset keeps its group alive; the group handle may be freed first. */
TSG_API tsg_status tsg_subset_parse(const tsg_group* g, const char* text, tsg_subset** out);
TSG_API void tsg_subset_free(tsg_subset* s);
TSG_API tsg_status tsg_subset_size(const tsg_subset* s, int* out);

TSG_API tsg_status tsg_digraph_two_sided(const tsg_subset* left, const tsg_subset* right, tsg_digraph** out);
TSG_API tsg_status tsg_digraph_cayley(const tsg_subset* connection_set, tsg_digraph** out);
TSG_API void tsg_digraph_free(tsg_digraph* d);
TSG_API tsg_status tsg_digraph_vertex_count(const tsg_digraph* d, int* out);
TSG_API tsg_status tsg_digraph_arc_count(const tsg_digraph* d, size_t* out);
TSG_API tsg_status tsg_digraph_has_arc(const tsg_digraph* d, int from, int to, int* out);
TSG_API tsg_status tsg_digraph_component_count(const tsg_digraph* d, int* strong, int* weak);
TSG_API tsg_status tsg_digraphs_isomorphic(const tsg_digraph* a, const tsg_digraph* b, int* out);
TSG_API tsg_status tsg_digraph_dot(const tsg_digraph* d, char** out);
/* {group_spec, source, arcs} */
TSG_API tsg_status tsg_digraph_json(const tsg_digraph* d, char** out);
/* {strong, weak, iso_classes} */
TSG_API tsg_status tsg_digraph_components_json(const tsg_digraph* d, char** out);

/* checks: comma-separated subset of valency,components,cosets,burnside,
   theorem24,retract; NULL or "" selects valency,components. */
TSG_API tsg_status tsg_analyze(const char* group_spec, const char* left, const char* right, const char* checks,
                               int emit_dot, char** json_out);
/* only: a fixture id, or NULL for every fixture. */
TSG_API tsg_status tsg_paper_examples(const char* only, char** json_out);
TSG_API tsg_status tsg_verify(uint64_t seed, int instances, int max_order, int threads, char** json_out);

#ifdef __cplusplus
}
#endif

#endif
