#pragma once

// Node placement, key-ring sampling and edge construction for the random key
// graph / random geometric graph intersection.

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rkgrgg/combinatorics.hpp"

namespace rkgrgg {

using NodeId = std::uint32_t;
using KeyId = std::uint64_t;
using KeyRing = std::vector<KeyId>;

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Boundary { square, torus };
enum class EdgeRule { geometric_only, key_only, intersection };

std::string_view to_string(Boundary b) noexcept;
std::string_view to_string(EdgeRule r) noexcept;
std::optional<Boundary> parse_boundary(std::string_view s) noexcept;
std::optional<EdgeRule> parse_edge_rule(std::string_view s) noexcept;

struct ModelParams {
  std::uint64_t n = 0;
  KeyPoolParams pool;
  double radius = 0.0;
  Boundary boundary = Boundary::square;
  EdgeRule rule = EdgeRule::intersection;

  /// a_n = pi r^2. On the square boundary this overstates the covered area
  /// for nodes within r of an edge.
  [[nodiscard]] double area_term() const noexcept {
    return std::numbers::pi * radius * radius;
  }
};

/// Throws ValidationError naming the field that breaks n >= 2, radius > 0 or
/// the key-pool constraints required by `rule`.
void validate(const ModelParams& params);

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph in compressed sparse row form. Neighbor lists are
/// sorted; instances are immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list; duplicate edges are merged. Throws DomainError
  /// on self-loops or out-of-range endpoints.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  [[nodiscard]] std::size_t node_count() const noexcept {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }
  [[nodiscard]] std::size_t edge_count() const noexcept {
    return targets_.size() / 2;
  }
  [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(NodeId v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  [[nodiscard]] bool has_edge(NodeId u, NodeId v) const;

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

class IntersectionGraph {
 public:
  IntersectionGraph(std::vector<Point> positions, std::vector<KeyRing> rings,
                    double radius, Boundary boundary, EdgeRule rule,
                    Graph topology);

  [[nodiscard]] const Graph& topology() const noexcept { return topology_; }
  [[nodiscard]] std::span<const Point> positions() const noexcept {
    return positions_;
  }
  /// Empty for geometric_only graphs built without rings.
  [[nodiscard]] std::span<const KeyRing> key_rings() const noexcept {
    return rings_;
  }
  [[nodiscard]] double radius() const noexcept { return radius_; }
  [[nodiscard]] Boundary boundary() const noexcept { return boundary_; }
  [[nodiscard]] EdgeRule edge_rule() const noexcept { return rule_; }
  [[nodiscard]] std::size_t node_count() const noexcept {
    return positions_.size();
  }

 private:
  std::vector<Point> positions_;
  std::vector<KeyRing> rings_;
  double radius_;
  Boundary boundary_;
  EdgeRule rule_;
  Graph topology_;
};

/// Euclidean distance on [0,1]^2, or the wrap-around distance on the torus.
double distance(Point a, Point b, Boundary boundary) noexcept;
double distance_squared(Point a, Point b, Boundary boundary) noexcept;

/// n i.i.d. uniform points in [0,1)^2; node i draws from its own substream.
std::vector<Point> sample_positions(std::size_t n, std::uint64_t seed);

/// Uniform K-subset of {0, ..., P-1}, sorted. Requires 1 <= K <= P.
KeyRing sample_key_ring(std::uint64_t key, std::uint64_t pool_size,
                        std::uint64_t ring_size);

/// n independent uniform K-subsets; node i draws from its own substream.
std::vector<KeyRing> sample_key_rings(std::size_t n, const KeyPoolParams& pool,
                                      std::uint64_t seed);

/// True iff the two sorted rings intersect.
bool shares_key(std::span<const KeyId> a, std::span<const KeyId> b) noexcept;

/// Grid-accelerated construction: geometric candidates come only from the
/// 3x3 block of cells (side >= radius) around each node.
IntersectionGraph build_graph(std::vector<Point> positions,
                              std::vector<KeyRing> rings, double radius,
                              Boundary boundary, EdgeRule rule);

/// All-pairs O(n^2) construction used as an independent oracle.
IntersectionGraph build_graph_reference(std::vector<Point> positions,
                                        std::vector<KeyRing> rings,
                                        double radius, Boundary boundary,
                                        EdgeRule rule);

/// Samples positions and rings from `seed` and builds the graph.
IntersectionGraph generate_instance(const ModelParams& params,
                                    std::uint64_t seed);

}  // namespace rkgrgg
