#include "rkgrgg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <utility>

#include "rkgrgg/error.hpp"
#include "rkgrgg/random.hpp"

namespace rkgrgg {

std::string_view to_string(Boundary b) noexcept {
  return b == Boundary::torus ? "torus" : "square";
}

std::string_view to_string(EdgeRule r) noexcept {
  switch (r) {
    case EdgeRule::geometric_only:
      return "geometric_only";
    case EdgeRule::key_only:
      return "key_only";
    case EdgeRule::intersection:
      break;
  }
  return "intersection";
}

std::optional<Boundary> parse_boundary(std::string_view s) noexcept {
  if (s == "square") return Boundary::square;
  if (s == "torus") return Boundary::torus;
  return std::nullopt;
}

std::optional<EdgeRule> parse_edge_rule(std::string_view s) noexcept {
  if (s == "geometric_only") return EdgeRule::geometric_only;
  if (s == "key_only") return EdgeRule::key_only;
  if (s == "intersection") return EdgeRule::intersection;
  return std::nullopt;
}

void validate(const ModelParams& params) {
  if (params.n < 2) {
    throw ValidationError("n must be >= 2");
  }
  if (params.n > std::uint64_t{0xffffffff}) {
    throw ValidationError("n must fit in 32-bit node ids");
  }
  if (!(params.radius > 0.0) || !std::isfinite(params.radius)) {
    throw ValidationError("radius must be > 0");
  }
  if (params.rule != EdgeRule::geometric_only) {
    if (params.pool.ring_size < 1) {
      throw ValidationError("ring must be >= 1");
    }
    if (params.pool.ring_size > params.pool.pool_size) {
      throw ValidationError("ring must not exceed pool");
    }
  }
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  Graph g;
  std::vector<std::size_t> degree(node_count, 0);
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw DomainError("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw DomainError("self-loops are not allowed");
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.targets_.resize(g.offsets_[node_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.targets_[cursor[e.u]++] = e.v;
    g.targets_[cursor[e.v]++] = e.u;
  }

  // Sort each list and squeeze out duplicates.
  std::vector<std::size_t> new_offsets(node_count + 1, 0);
  std::size_t write = 0;
  for (std::size_t v = 0; v < node_count; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last =
        g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    auto uend = std::unique(first, last);
    for (auto it = first; it != uend; ++it) {
      g.targets_[write++] = *it;
    }
    new_offsets[v + 1] = write;
  }
  g.targets_.resize(write);
  g.offsets_ = std::move(new_offsets);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

IntersectionGraph::IntersectionGraph(std::vector<Point> positions,
                                     std::vector<KeyRing> rings, double radius,
                                     Boundary boundary, EdgeRule rule,
                                     Graph topology)
    : positions_(std::move(positions)),
      rings_(std::move(rings)),
      radius_(radius),
      boundary_(boundary),
      rule_(rule),
      topology_(std::move(topology)) {}

// ---------------------------------------------------------------------------
// Geometry and sampling

double distance_squared(Point a, Point b, Boundary boundary) noexcept {
  double dx = std::fabs(a.x - b.x);
  double dy = std::fabs(a.y - b.y);
  if (boundary == Boundary::torus) {
    dx = std::min(dx, 1.0 - dx);
    dy = std::min(dy, 1.0 - dy);
  }
  return dx * dx + dy * dy;
}

double distance(Point a, Point b, Boundary boundary) noexcept {
  return std::sqrt(distance_squared(a, b, boundary));
}

std::vector<Point> sample_positions(std::size_t n, std::uint64_t seed) {
  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    CounterRng rng(derive_seed(seed, StreamTag::positions, i));
    out[i].x = rng.uniform01();
    out[i].y = rng.uniform01();
  }
  return out;
}

KeyRing sample_key_ring(std::uint64_t key, std::uint64_t pool_size,
                        std::uint64_t ring_size) {
  if (ring_size < 1 || ring_size > pool_size) {
    throw DomainError("sample_key_ring: requires 1 <= K <= P");
  }
  // Partial Fisher-Yates over the identity permutation of {0..P-1}; only the
  // displaced slots are materialized.
  CounterRng rng(key);
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  displaced.reserve(2 * ring_size);
  auto slot = [&](std::uint64_t i) {
    auto it = displaced.find(i);
    return it == displaced.end() ? i : it->second;
  };
  KeyRing ring;
  ring.reserve(ring_size);
  for (std::uint64_t i = 0; i < ring_size; ++i) {
    const std::uint64_t j = i + rng.below(pool_size - i);
    const std::uint64_t vi = slot(i);
    const std::uint64_t vj = slot(j);
    ring.push_back(vj);
    displaced[j] = vi;
  }
  std::sort(ring.begin(), ring.end());
  return ring;
}

std::vector<KeyRing> sample_key_rings(std::size_t n, const KeyPoolParams& pool,
                                      std::uint64_t seed) {
  std::vector<KeyRing> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(sample_key_ring(derive_seed(seed, StreamTag::rings, i),
                                  pool.pool_size, pool.ring_size));
  }
  return out;
}

bool shares_key(std::span<const KeyId> a, std::span<const KeyId> b) noexcept {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Edge construction

namespace {

void check_build_inputs(const std::vector<Point>& positions,
                        const std::vector<KeyRing>& rings, double radius,
                        EdgeRule rule) {
  if (!(radius > 0.0)) {
    throw DomainError("build_graph: radius must be > 0");
  }
  if (positions.size() > std::size_t{0xffffffff}) {
    throw DomainError("build_graph: too many nodes");
  }
  if (rule != EdgeRule::geometric_only && rings.size() != positions.size()) {
    throw DomainError("build_graph: positions and key rings differ in length");
  }
  if (!rings.empty() && rings.size() != positions.size()) {
    throw DomainError("build_graph: positions and key rings differ in length");
  }
}

class EdgePredicate {
 public:
  EdgePredicate(const std::vector<Point>& positions,
                const std::vector<KeyRing>& rings, double radius,
                Boundary boundary, EdgeRule rule)
      : positions_(positions),
        rings_(rings),
        r2_(radius * radius),
        boundary_(boundary),
        rule_(rule) {}

  bool operator()(NodeId i, NodeId j) const noexcept {
    if (rule_ != EdgeRule::key_only &&
        distance_squared(positions_[i], positions_[j], boundary_) > r2_) {
      return false;
    }
    if (rule_ != EdgeRule::geometric_only &&
        !shares_key(rings_[i], rings_[j])) {
      return false;
    }
    return true;
  }

 private:
  const std::vector<Point>& positions_;
  const std::vector<KeyRing>& rings_;
  double r2_;
  Boundary boundary_;
  EdgeRule rule_;
};

std::size_t grid_cells_per_side(double radius, std::size_t n) {
  if (radius >= 1.0) return 1;
  const double fit = std::floor(1.0 / radius);
  const double cap = 2.0 * std::ceil(std::sqrt(static_cast<double>(n))) + 1.0;
  return static_cast<std::size_t>(std::max(1.0, std::min(fit, cap)));
}

std::size_t grid_coord(double v, std::size_t g) {
  const auto c = static_cast<std::size_t>(v * static_cast<double>(g));
  return std::min(c, g - 1);
}

}  // namespace

IntersectionGraph build_graph(std::vector<Point> positions,
                              std::vector<KeyRing> rings, double radius,
                              Boundary boundary, EdgeRule rule) {
  check_build_inputs(positions, rings, radius, rule);
  const std::size_t n = positions.size();
  const EdgePredicate accept(positions, rings, radius, boundary, rule);
  std::vector<Edge> edges;

  if (rule == EdgeRule::key_only) {
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        if (accept(i, j)) edges.push_back({i, j});
      }
    }
    Graph g = Graph::from_edges(n, edges);
    return {std::move(positions), std::move(rings), radius, boundary, rule,
            std::move(g)};
  }

  const std::size_t g = grid_cells_per_side(radius, n);
  const std::size_t cells = g * g;

  // Bucket nodes by cell (counting sort keeps node order within a cell).
  std::vector<std::size_t> cell_of(n);
  std::vector<std::size_t> start(cells + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c =
        grid_coord(positions[i].y, g) * g + grid_coord(positions[i].x, g);
    cell_of[i] = c;
    ++start[c + 1];
  }
  for (std::size_t c = 0; c < cells; ++c) start[c + 1] += start[c];
  std::vector<NodeId> members(n);
  {
    std::vector<std::size_t> cursor(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < n; ++i) {
      members[cursor[cell_of[i]]++] = static_cast<NodeId>(i);
    }
  }

  std::vector<std::size_t> around;
  around.reserve(9);
  for (std::size_t c = 0; c < cells; ++c) {
    if (start[c] == start[c + 1]) continue;
    const auto row = static_cast<std::ptrdiff_t>(c / g);
    const auto col = static_cast<std::ptrdiff_t>(c % g);
    const auto gs = static_cast<std::ptrdiff_t>(g);
    around.clear();
    for (std::ptrdiff_t dr = -1; dr <= 1; ++dr) {
      for (std::ptrdiff_t dc = -1; dc <= 1; ++dc) {
        std::ptrdiff_t r = row + dr;
        std::ptrdiff_t q = col + dc;
        if (boundary == Boundary::torus) {
          r = (r + gs) % gs;
          q = (q + gs) % gs;
        } else if (r < 0 || r >= gs || q < 0 || q >= gs) {
          continue;
        }
        around.push_back(static_cast<std::size_t>(r * gs + q));
      }
    }
    std::sort(around.begin(), around.end());
    around.erase(std::unique(around.begin(), around.end()), around.end());

    for (std::size_t a = start[c]; a < start[c + 1]; ++a) {
      const NodeId i = members[a];
      for (std::size_t other : around) {
        for (std::size_t b = start[other]; b < start[other + 1]; ++b) {
          const NodeId j = members[b];
          if (j > i && accept(i, j)) edges.push_back({i, j});
        }
      }
    }
  }
  Graph topo = Graph::from_edges(n, edges);
  return {std::move(positions), std::move(rings), radius, boundary, rule,
          std::move(topo)};
}

IntersectionGraph build_graph_reference(std::vector<Point> positions,
                                        std::vector<KeyRing> rings,
                                        double radius, Boundary boundary,
                                        EdgeRule rule) {
  check_build_inputs(positions, rings, radius, rule);
  const std::size_t n = positions.size();
  const double r2 = radius * radius;
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const bool near = distance_squared(positions[i], positions[j], boundary) <= r2;
      bool keyed = false;
      if (rule != EdgeRule::geometric_only) {
        const KeyRing& a = rings[i];
        const KeyRing& b = rings[j];
        keyed = std::find_first_of(a.begin(), a.end(), b.begin(), b.end()) !=
                a.end();
      }
      const bool keep = rule == EdgeRule::geometric_only ? near
                        : rule == EdgeRule::key_only     ? keyed
                                                         : near && keyed;
      if (keep) edges.push_back({i, j});
    }
  }
  Graph topo = Graph::from_edges(n, edges);
  return {std::move(positions), std::move(rings), radius, boundary, rule,
          std::move(topo)};
}

IntersectionGraph generate_instance(const ModelParams& params,
                                    std::uint64_t seed) {
  validate(params);
  auto positions = sample_positions(params.n, seed);
  std::vector<KeyRing> rings;
  if (params.rule != EdgeRule::geometric_only) {
    rings = sample_key_rings(params.n, params.pool, seed);
  }
  return build_graph(std::move(positions), std::move(rings), params.radius,
                     params.boundary, params.rule);
}

}  // namespace rkgrgg
