#include "rkgrgg/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "rkgrgg/connectivity.hpp"
#include "rkgrgg/error.hpp"

namespace rkgrgg {

namespace {

constexpr double kRoundingSlack = 1e-9;

bool shifted_square(const TessellationSpec& spec, Boundary boundary) noexcept {
  return spec.offset > 0.0 && boundary == Boundary::square;
}

std::size_t axis_index(double v, const TessellationSpec& spec,
                       Boundary boundary) noexcept {
  const std::size_t m = spec.cells_per_side;
  const auto md = static_cast<double>(m);
  if (spec.offset <= 0.0) {
    return std::min(static_cast<std::size_t>(std::max(v, 0.0) * md), m - 1);
  }
  if (boundary == Boundary::torus) {
    double u = v - spec.offset;
    if (u < 0.0) u += 1.0;
    return std::min(static_cast<std::size_t>(std::max(u, 0.0) * md), m - 1);
  }
  // Square: column 0 and column m are half-width strips.
  return std::min(static_cast<std::size_t>(std::max(v, 0.0) * md + 0.5), m);
}

}  // namespace

DualTessellation make_dual_tessellations(double radius, double theta) {
  if (!(radius > 0.0)) {
    throw DomainError("make_dual_tessellations: radius must be > 0");
  }
  if (!(theta > 0.0 && theta <= 0.5)) {
    throw DomainError("make_dual_tessellations: theta must lie in (0, 1/2]");
  }
  const double target_side = std::sqrt(theta) * radius;
  std::size_t m = 1;
  if (target_side < 1.0) {
    m = static_cast<std::size_t>(std::ceil(1.0 / target_side - kRoundingSlack));
    m = std::max<std::size_t>(m, 1);
  }
  TessellationSpec base;
  base.cells_per_side = m;
  base.cell_side = 1.0 / static_cast<double>(m);
  base.offset = 0.0;
  base.effective_radius = std::numbers::sqrt2 * base.cell_side;

  TessellationSpec shifted = base;
  shifted.offset = base.cell_side / 2.0;
  return {base, shifted, radius, theta};
}

std::size_t cell_columns(const TessellationSpec& spec, Boundary boundary) noexcept {
  return shifted_square(spec, boundary) ? spec.cells_per_side + 1
                                        : spec.cells_per_side;
}

std::size_t cell_count(const TessellationSpec& spec, Boundary boundary) noexcept {
  const std::size_t c = cell_columns(spec, boundary);
  return c * c;
}

std::size_t cell_of(Point p, const TessellationSpec& spec, Boundary boundary) noexcept {
  const std::size_t cols = cell_columns(spec, boundary);
  return axis_index(p.y, spec, boundary) * cols + axis_index(p.x, spec, boundary);
}

bool is_interior(std::size_t cell, const TessellationSpec& spec,
                 Boundary boundary) noexcept {
  if (!shifted_square(spec, boundary)) return true;
  const std::size_t cols = spec.cells_per_side + 1;
  const std::size_t row = cell / cols;
  const std::size_t col = cell % cols;
  const std::size_t m = spec.cells_per_side;
  return row >= 1 && row < m && col >= 1 && col < m;
}

double cell_area(std::size_t cell, const TessellationSpec& spec,
                 Boundary boundary) noexcept {
  const double s = spec.cell_side;
  if (!shifted_square(spec, boundary)) return s * s;
  const std::size_t cols = spec.cells_per_side + 1;
  const std::size_t m = spec.cells_per_side;
  auto width = [&](std::size_t i) { return (i == 0 || i == m) ? s / 2.0 : s; };
  return width(cell / cols) * width(cell % cols);
}

std::size_t CellStats::empty_cells() const noexcept {
  return static_cast<std::size_t>(std::count(counts.begin(), counts.end(), 0U));
}

std::size_t CellStats::not_dense_interior() const noexcept {
  std::size_t k = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (interior[i] && not_dense[i]) ++k;
  }
  return k;
}

std::size_t CellStats::interior_cells() const noexcept {
  return static_cast<std::size_t>(std::count(interior.begin(), interior.end(), true));
}

bool CellStats::all_subgraphs_connected() const noexcept {
  return std::all_of(subgraph_connected.begin(), subgraph_connected.end(),
                     [](bool b) { return b; });
}

CellStats cell_stats(const IntersectionGraph& graph, const TessellationSpec& spec,
                     double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("cell_stats: delta must lie in (0,1)");
  }
  if (graph.edge_rule() != EdgeRule::key_only &&
      spec.effective_radius > graph.radius() * (1.0 + kRoundingSlack)) {
    throw DomainError(
        "cell_stats: cell diameter exceeds the communication radius; "
        "same-cell pairs would not be guaranteed in range");
  }
  const Boundary boundary = graph.boundary();
  const std::size_t cells = cell_count(spec, boundary);
  const std::size_t n = graph.node_count();

  CellStats st;
  st.spec = spec;
  st.boundary = boundary;
  st.delta = delta;
  st.counts.assign(cells, 0);
  st.expected.resize(cells);
  st.not_dense.resize(cells);
  st.subgraph_connected.assign(cells, true);
  st.interior.resize(cells);

  std::vector<std::size_t> home(n);
  const auto positions = graph.positions();
  for (std::size_t v = 0; v < n; ++v) {
    home[v] = cell_of(positions[v], spec, boundary);
    ++st.counts[home[v]];
  }

  // Induced subgraphs: unite only edges whose endpoints share a cell.
  const Graph& topo = graph.topology();
  DisjointSets sets(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : topo.neighbors(u)) {
      if (u < v && home[u] == home[v]) sets.unite(u, v);
    }
  }
  std::vector<std::size_t> root(cells, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t c = home[v];
    const std::size_t r = sets.find(v);
    if (root[c] == n) {
      root[c] = r;
    } else if (root[c] != r) {
      st.subgraph_connected[c] = false;
    }
  }

  const auto nd = static_cast<double>(n);
  for (std::size_t c = 0; c < cells; ++c) {
    st.interior[c] = is_interior(c, spec, boundary);
    st.expected[c] = nd * cell_area(c, spec, boundary);
    const double dev = std::fabs(static_cast<double>(st.counts[c]) - st.expected[c]);
    st.not_dense[c] = dev >= delta * st.expected[c];
  }
  return st;
}

DualConnectivity dual_tessellation_connectivity(const IntersectionGraph& graph,
                                                const DualTessellation& specs,
                                                double delta) {
  DualConnectivity out;
  out.first = cell_stats(graph, specs.first, delta);
  out.second = cell_stats(graph, specs.second, delta);
  out.t1 = out.first.tessellation_connected();
  out.t2 = out.second.tessellation_connected();
  out.all_dense = out.first.all_interior_dense() && out.second.all_interior_dense();
  out.graph_connected = analyze(graph.topology()).is_connected;
  return out;
}

nlohmann::json to_json(const TessellationSpec& spec) {
  return {
      {"cell_side", spec.cell_side},
      {"offset", {spec.offset, spec.offset}},
      {"cells_per_side", spec.cells_per_side},
      {"effective_radius", spec.effective_radius},
  };
}

nlohmann::json to_json(const CellStats& stats) {
  nlohmann::json j;
  j["spec"] = to_json(stats.spec);
  j["boundary"] = std::string(to_string(stats.boundary));
  j["delta"] = stats.delta;
  j["counts"] = stats.counts;
  j["not_dense_flags"] = stats.not_dense;
  j["subgraph_connected_flags"] = stats.subgraph_connected;
  j["interior_flags"] = stats.interior;
  j["tessellation_connected"] = stats.tessellation_connected();
  return j;
}

void write_cell_csv(const CellStats& stats, std::ostream& out) {
  out << "cell_index,count,not_dense,subgraph_connected\n";
  for (std::size_t c = 0; c < stats.counts.size(); ++c) {
    out << c << ',' << stats.counts[c] << ',' << (stats.not_dense[c] ? 1 : 0)
        << ',' << (stats.subgraph_connected[c] ? 1 : 0) << '\n';
  }
}

}  // namespace rkgrgg
