#include "rkgrgg/rkgrgg.h"

#include <cmath>
#include <exception>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rkgrgg/bounds.hpp"
#include "rkgrgg/combinatorics.hpp"
#include "rkgrgg/commands.hpp"
#include "rkgrgg/connectivity.hpp"
#include "rkgrgg/error.hpp"
#include "rkgrgg/graph.hpp"
#include "rkgrgg/graph_io.hpp"

struct rkg_config {
  rkgrgg::RunConfig config;
};

struct rkg_graph {
  rkgrgg::Graph topology;
  rkgrgg::EdgeListHeader header;
};

struct rkg_string {
  std::string text;
};

namespace {

thread_local std::string last_error;

rkg_status fail(rkg_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
rkg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const rkgrgg::ValidationError& e) {
    return fail(RKG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const rkgrgg::DomainError& e) {
    return fail(RKG_ERR_DOMAIN, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(RKG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(RKG_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RKG_ERR_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return fail(RKG_ERR_RUNTIME, e.what());
  } catch (...) {
    return fail(RKG_ERR_RUNTIME, "unknown error");
  }
}

rkg_status null_arg(const char* name) {
  return fail(RKG_ERR_NULL, std::string(name) + " must not be NULL");
}

rkg_string* make_string(std::string text) { return new rkg_string{std::move(text)}; }

}  // namespace

extern "C" {

const char* rkg_version(void) { return "1.0.0"; }

const char* rkg_last_error(void) { return last_error.c_str(); }

const char* rkg_status_name(rkg_status status) {
  switch (status) {
    case RKG_OK:
      return "ok";
    case RKG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case RKG_ERR_DOMAIN:
      return "domain error";
    case RKG_ERR_IO:
      return "i/o error";
    case RKG_ERR_RUNTIME:
      return "runtime error";
    case RKG_ERR_SELFTEST:
      return "selftest failed";
    case RKG_ERR_NULL:
      return "null pointer";
  }
  return "unknown status";
}

const char* rkg_string_data(const rkg_string* s) { return s ? s->text.c_str() : nullptr; }

size_t rkg_string_size(const rkg_string* s) { return s ? s->text.size() : 0; }

void rkg_string_free(rkg_string* s) { delete s; }

rkg_status rkg_config_parse(const char* json_text, rkg_config** out) {
  if (!json_text) return null_arg("json_text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto cfg = rkgrgg::parse_config_text(json_text);
    *out = new rkg_config{std::move(cfg)};
    return RKG_OK;
  });
}

void rkg_config_free(rkg_config* config) { delete config; }

rkg_status rkg_config_echo(const rkg_config* config, rkg_string** out) {
  if (!config) return null_arg("config");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = make_string(rkgrgg::to_json(config->config).dump(2) + "\n");
    return RKG_OK;
  });
}

rkg_status rkg_config_output_path(const rkg_config* config, rkg_string** out) {
  if (!config) return null_arg("config");
  if (!out) return null_arg("out");
  *out = make_string(config->config.output);
  return RKG_OK;
}

rkg_status rkg_run(const rkg_config* config, rkg_string** out) {
  if (!config) return null_arg("config");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    try {
      auto result = rkgrgg::run_command(config->config);
      const bool failed = result.selftest_failed;
      *out = make_string(std::move(result.text));
      if (failed) return fail(RKG_ERR_SELFTEST, "selftest: at least one suite failed");
      return RKG_OK;
    } catch (const rkgrgg::ValidationError&) {
      throw;
    } catch (const rkgrgg::DomainError&) {
      throw;
    } catch (const std::runtime_error& e) {
      // Files that cannot be opened or read.
      return fail(RKG_ERR_IO, e.what());
    }
  });
}

rkg_status rkg_graph_generate(uint64_t n, uint64_t pool, uint64_t ring, double radius,
                              const char* boundary, const char* rule, uint64_t seed,
                              rkg_graph** out) {
  if (!boundary) return null_arg("boundary");
  if (!rule) return null_arg("rule");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    rkgrgg::ModelParams p;
    p.n = n;
    p.pool = {pool, ring};
    p.radius = radius;
    const auto b = rkgrgg::parse_boundary(boundary);
    if (!b) throw rkgrgg::ValidationError("boundary must be square or torus");
    const auto r = rkgrgg::parse_edge_rule(rule);
    if (!r) throw rkgrgg::ValidationError("rule must be geometric_only, key_only or intersection");
    p.boundary = *b;
    p.rule = *r;
    auto g = rkgrgg::generate_instance(p, seed);
    rkgrgg::EdgeListHeader h{g.node_count(), g.topology().edge_count(), radius, *b, *r};
    *out = new rkg_graph{g.topology(), h};
    return RKG_OK;
  });
}

rkg_status rkg_graph_parse(const char* text, rkg_graph** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    const std::string content(text);
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
      auto inst = rkgrgg::instance_from_json(nlohmann::json::parse(content));
      rkgrgg::EdgeListHeader h{inst.graph.node_count(), inst.graph.topology().edge_count(),
                               inst.params.radius, inst.params.boundary, inst.params.rule};
      *out = new rkg_graph{inst.graph.topology(), h};
    } else {
      std::istringstream in(content);
      rkgrgg::EdgeListHeader h;
      auto g = rkgrgg::read_edge_list(in, &h);
      *out = new rkg_graph{std::move(g), h};
    }
    return RKG_OK;
  });
}

void rkg_graph_free(rkg_graph* graph) { delete graph; }

rkg_status rkg_graph_node_count(const rkg_graph* graph, size_t* out) {
  if (!graph) return null_arg("graph");
  if (!out) return null_arg("out");
  *out = graph->topology.node_count();
  return RKG_OK;
}

rkg_status rkg_graph_edge_count(const rkg_graph* graph, size_t* out) {
  if (!graph) return null_arg("graph");
  if (!out) return null_arg("out");
  *out = graph->topology.edge_count();
  return RKG_OK;
}

rkg_status rkg_graph_is_connected(const rkg_graph* graph, int* out) {
  if (!graph) return null_arg("graph");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = rkgrgg::analyze(graph->topology).is_connected ? 1 : 0;
    return RKG_OK;
  });
}

rkg_status rkg_graph_edge_list(const rkg_graph* graph, rkg_string** out) {
  if (!graph) return null_arg("graph");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    std::ostringstream s;
    rkgrgg::write_edge_list(graph->topology, graph->header, s);
    *out = make_string(s.str());
    return RKG_OK;
  });
}

rkg_status rkg_graph_analyze(const rkg_graph* graph, rkg_string** out) {
  if (!graph) return null_arg("graph");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = make_string(rkgrgg::to_json(rkgrgg::analyze(graph->topology)).dump() + "\n");
    return RKG_OK;
  });
}

rkg_status rkg_link_probability(uint64_t pool, uint64_t ring, double* beta) {
  if (!beta) return null_arg("beta");
  return guarded([&] {
    *beta = rkgrgg::link_probability({pool, ring}).beta;
    return RKG_OK;
  });
}

rkg_status rkg_disconnect_floor(double c1, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    if (!std::isfinite(c1)) throw rkgrgg::DomainError("c1 must be finite");
    *out = rkgrgg::disconnect_lower_bound(c1, 2, 1.0).floor;
    return RKG_OK;
  });
}

}  // extern "C"
