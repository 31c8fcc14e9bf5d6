#include "rkgrgg/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "rkgrgg/error.hpp"
#include "rkgrgg/format.hpp"

namespace rkgrgg {

void write_edge_list(const Graph& g, const EdgeListHeader& header, std::ostream& out) {
  out << g.node_count() << ' ' << g.edge_count() << ' ' << format_double(header.radius)
      << ' ' << to_string(header.boundary) << ' ' << to_string(header.rule) << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
}

void write_edge_list(const IntersectionGraph& graph, std::ostream& out) {
  EdgeListHeader header;
  header.radius = graph.radius();
  header.boundary = graph.boundary();
  header.rule = graph.edge_rule();
  write_edge_list(graph.topology(), header, out);
}

Graph read_edge_list(std::istream& in, EdgeListHeader* header) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError("edge list: missing header line");
  }
  std::istringstream hs(line);
  EdgeListHeader h;
  std::string boundary;
  std::string rule;
  if (!(hs >> h.node_count >> h.edge_count >> h.radius >> boundary >> rule)) {
    throw ValidationError(
        "edge list: header must read \"n m radius boundary rule\"");
  }
  const auto b = parse_boundary(boundary);
  const auto r = parse_edge_rule(rule);
  if (!b) throw ValidationError("edge list: boundary must be square or torus");
  if (!r) {
    throw ValidationError(
        "edge list: rule must be geometric_only, key_only or intersection");
  }
  h.boundary = *b;
  h.rule = *r;

  std::vector<Edge> edges;
  edges.reserve(h.edge_count);
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  while (in >> u >> v) {
    if (u >= h.node_count || v >= h.node_count || u >= v) {
      throw ValidationError("edge list: each line must be \"i j\" with i < j < n");
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  if (!in.eof()) {
    throw ValidationError("edge list: malformed edge line");
  }
  if (edges.size() != h.edge_count) {
    throw ValidationError("edge list: edge count disagrees with header");
  }
  if (header) *header = h;
  return Graph::from_edges(h.node_count, edges);
}

nlohmann::json instance_to_json(const IntersectionGraph& graph,
                                const ModelParams& params, std::uint64_t seed) {
  nlohmann::json doc;
  doc["params"] = {
      {"n", params.n},
      {"pool", params.pool.pool_size},
      {"ring", params.pool.ring_size},
      {"radius", params.radius},
      {"boundary", std::string(to_string(params.boundary))},
      {"rule", std::string(to_string(params.rule))},
  };
  doc["seed"] = seed;
  auto& pos = doc["positions"] = nlohmann::json::array();
  for (const Point& p : graph.positions()) {
    pos.push_back({p.x, p.y});
  }
  auto& rings = doc["rings"] = nlohmann::json::array();
  for (const KeyRing& r : graph.key_rings()) {
    rings.push_back(r);
  }
  return doc;
}

LoadedInstance instance_from_json(const nlohmann::json& doc) {
  try {
    const auto& p = doc.at("params");
    ModelParams params;
    params.n = p.at("n").get<std::uint64_t>();
    params.pool.pool_size = p.value("pool", std::uint64_t{0});
    params.pool.ring_size = p.value("ring", std::uint64_t{0});
    params.radius = p.at("radius").get<double>();
    const auto b = parse_boundary(p.at("boundary").get<std::string>());
    const auto r = parse_edge_rule(p.at("rule").get<std::string>());
    if (!b) throw ValidationError("instance: unknown boundary");
    if (!r) throw ValidationError("instance: unknown rule");
    params.boundary = *b;
    params.rule = *r;
    validate(params);

    std::vector<Point> positions;
    for (const auto& xy : doc.at("positions")) {
      positions.push_back({xy.at(0).get<double>(), xy.at(1).get<double>()});
    }
    std::vector<KeyRing> rings;
    if (doc.contains("rings")) {
      for (const auto& ring : doc.at("rings")) {
        KeyRing kr = ring.get<KeyRing>();
        std::sort(kr.begin(), kr.end());
        rings.push_back(std::move(kr));
      }
    }
    if (positions.size() != params.n) {
      throw ValidationError("instance: positions length must equal params.n");
    }
    if (params.rule != EdgeRule::geometric_only && rings.size() != params.n) {
      throw ValidationError("instance: rings length must equal params.n");
    }
    const std::uint64_t seed = doc.value("seed", std::uint64_t{0});
    IntersectionGraph g = build_graph(std::move(positions), std::move(rings),
                                      params.radius, params.boundary,
                                      params.rule);
    return {params, seed, std::move(g)};
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("instance: ") + e.what());
  }
}

}  // namespace rkgrgg
