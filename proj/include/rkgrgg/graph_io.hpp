#pragma once

// Text and JSON interchange for generated instances.
//
// Edge list:  header "n m radius boundary rule", then one "i j" line per
// edge (0-based, i < j, lexicographic order).
// Instance:   {"params": {...}, "seed": s, "positions": [[x,y],...],
//              "rings": [[k,...],...]}

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rkgrgg/graph.hpp"

namespace rkgrgg {

struct EdgeListHeader {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double radius = 0.0;
  Boundary boundary = Boundary::square;
  EdgeRule rule = EdgeRule::intersection;
};

void write_edge_list(const IntersectionGraph& graph, std::ostream& out);
/// Node and edge counts come from `g`; the header supplies the rest.
void write_edge_list(const Graph& g, const EdgeListHeader& header, std::ostream& out);

/// Parses an edge list; throws ValidationError on malformed input or when the
/// edge count disagrees with the header.
Graph read_edge_list(std::istream& in, EdgeListHeader* header = nullptr);

nlohmann::json instance_to_json(const IntersectionGraph& graph,
                                const ModelParams& params, std::uint64_t seed);

struct LoadedInstance {
  ModelParams params;
  std::uint64_t seed = 0;
  IntersectionGraph graph;
};

/// Rebuilds the graph from the stored positions and rings.
LoadedInstance instance_from_json(const nlohmann::json& doc);

}  // namespace rkgrgg
