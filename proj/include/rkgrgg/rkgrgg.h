#ifndef RKGRGG_H
#define RKGRGG_H

/* C interface to the rkgrgg library. All handles are opaque; every call
   returns a status code and, on failure, leaves a message retrievable with
   rkg_last_error() on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RKG_API __declspec(dllexport)
#else
#define RKG_API __attribute__((visibility("default")))
#endif

typedef enum rkg_status {
  RKG_OK = 0,
  RKG_ERR_INVALID_ARGUMENT = 1, /* configuration or parameter validation */
  RKG_ERR_DOMAIN = 2,           /* argument outside a formula's domain */
  RKG_ERR_IO = 3,
  RKG_ERR_RUNTIME = 4,
  RKG_ERR_SELFTEST = 5,         /* selftest ran and at least one suite failed */
  RKG_ERR_NULL = 6              /* a required pointer was NULL */
} rkg_status;

typedef struct rkg_config rkg_config;
typedef struct rkg_graph rkg_graph;
typedef struct rkg_string rkg_string;

RKG_API const char* rkg_version(void);
RKG_API const char* rkg_last_error(void);
RKG_API const char* rkg_status_name(rkg_status status);

/* Strings returned by the library. */
RKG_API const char* rkg_string_data(const rkg_string* s);
RKG_API size_t rkg_string_size(const rkg_string* s);
RKG_API void rkg_string_free(rkg_string* s);

/* Run configuration: one JSON document. */
RKG_API rkg_status rkg_config_parse(const char* json_text, rkg_config** out);
RKG_API void rkg_config_free(rkg_config* config);
/* Canonical JSON echo of a parsed config (the --dry-run output). */
RKG_API rkg_status rkg_config_echo(const rkg_config* config, rkg_string** out);
RKG_API rkg_status rkg_config_output_path(const rkg_config* config, rkg_string** out);
/* Executes the configured subcommand. On RKG_ERR_SELFTEST *out still holds
   the report. */
RKG_API rkg_status rkg_run(const rkg_config* config, rkg_string** out);

/* Graphs. boundary: "square" | "torus"; rule: "intersection" |
   "geometric_only" | "key_only". */
RKG_API rkg_status rkg_graph_generate(uint64_t n, uint64_t pool, uint64_t ring,
                                      double radius, const char* boundary,
                                      const char* rule, uint64_t seed,
                                      rkg_graph** out);
/* Accepts an instance JSON document or an edge list. */
RKG_API rkg_status rkg_graph_parse(const char* text, rkg_graph** out);
RKG_API void rkg_graph_free(rkg_graph* graph);
RKG_API rkg_status rkg_graph_node_count(const rkg_graph* graph, size_t* out);
RKG_API rkg_status rkg_graph_edge_count(const rkg_graph* graph, size_t* out);
RKG_API rkg_status rkg_graph_is_connected(const rkg_graph* graph, int* out);
RKG_API rkg_status rkg_graph_edge_list(const rkg_graph* graph, rkg_string** out);
/* Connectivity report as JSON. */
RKG_API rkg_status rkg_graph_analyze(const rkg_graph* graph, rkg_string** out);

/* Closed forms. */
RKG_API rkg_status rkg_link_probability(uint64_t pool, uint64_t ring, double* beta);
RKG_API rkg_status rkg_disconnect_floor(double c1, double* out);

#ifdef __cplusplus
}
#endif

#endif /* RKGRGG_H */
