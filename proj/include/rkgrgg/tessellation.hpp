#pragma once

// Two overlapping square tessellations of the unit square. The first is
// aligned with the origin, the second is shifted by half a cell in both
// axes. Cells are small enough that any two nodes in one cell are within
// communication range, so a cell's induced subgraph depends on keys alone.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "rkgrgg/graph.hpp"

namespace rkgrgg {

struct TessellationSpec {
  double cell_side = 1.0;           // s = 1 / cells_per_side
  double offset = 0.0;              // 0, or s/2 in both axes
  std::size_t cells_per_side = 1;   // 1/s, an integer
  double effective_radius = 0.0;    // sqrt(2) * s, the same-cell diameter
};

struct DualTessellation {
  TessellationSpec first;
  TessellationSpec second;
  double requested_radius = 0.0;
  double theta = 0.5;  // s^2 = theta * r^2 before rounding
};

/// cells_per_side = ceil(1 / (sqrt(theta) * radius)), at least 1. Rounding up
/// keeps sqrt(2) s <= radius for theta <= 1/2. radius >= sqrt(2) (theta = 1/2)
/// degenerates to a single cell. Throws DomainError for radius <= 0 or theta
/// outside (0, 1/2].
DualTessellation make_dual_tessellations(double radius, double theta = 0.5);

/// Number of cells, counting the half-width boundary strips that the shifted
/// tessellation has on the square.
std::size_t cell_count(const TessellationSpec& spec, Boundary boundary) noexcept;
std::size_t cell_columns(const TessellationSpec& spec, Boundary boundary) noexcept;

/// Row-major cell index. The shifted tessellation wraps modulo 1 on the torus
/// and has truncated boundary-strip cells on the square.
std::size_t cell_of(Point p, const TessellationSpec& spec, Boundary boundary) noexcept;

/// False for truncated boundary-strip cells.
bool is_interior(std::size_t cell, const TessellationSpec& spec,
                 Boundary boundary) noexcept;
double cell_area(std::size_t cell, const TessellationSpec& spec,
                 Boundary boundary) noexcept;

struct CellStats {
  TessellationSpec spec;
  Boundary boundary = Boundary::square;
  double delta = 0.5;
  std::vector<std::size_t> counts;
  std::vector<double> expected;            // n * cell area
  std::vector<bool> not_dense;             // |N_i - E N_i| >= delta E N_i
  std::vector<bool> subgraph_connected;    // empty cells count as connected
  std::vector<bool> interior;

  [[nodiscard]] std::size_t empty_cells() const noexcept;
  [[nodiscard]] std::size_t not_dense_interior() const noexcept;
  [[nodiscard]] std::size_t interior_cells() const noexcept;
  [[nodiscard]] bool all_nonempty() const noexcept { return empty_cells() == 0; }
  [[nodiscard]] bool all_subgraphs_connected() const noexcept;
  [[nodiscard]] bool all_interior_dense() const noexcept {
    return not_dense_interior() == 0;
  }
  /// T_i: no empty cell and every induced subgraph connected.
  [[nodiscard]] bool tessellation_connected() const noexcept {
    return all_nonempty() && all_subgraphs_connected();
  }
};

/// Throws DomainError when delta is outside (0,1), or when the cells are
/// wider than radius / sqrt(2) for a graph whose edges depend on distance.
CellStats cell_stats(const IntersectionGraph& graph, const TessellationSpec& spec,
                     double delta);

struct DualConnectivity {
  bool t1 = false;
  bool t2 = false;
  bool all_dense = false;        // every interior cell of both tessellations
  bool graph_connected = false;
  CellStats first;
  CellStats second;

  /// T1 and T2 (which already require every cell to be nonempty).
  [[nodiscard]] bool premise() const noexcept { return t1 && t2; }
  /// premise() => graph_connected. Observed, never assumed.
  [[nodiscard]] bool implication_holds() const noexcept {
    return !premise() || graph_connected;
  }
};

DualConnectivity dual_tessellation_connectivity(const IntersectionGraph& graph,
                                                const DualTessellation& specs,
                                                double delta);

nlohmann::json to_json(const TessellationSpec& spec);
nlohmann::json to_json(const CellStats& stats);

/// CSV with header "cell_index,count,not_dense,subgraph_connected".
void write_cell_csv(const CellStats& stats, std::ostream& out);

}  // namespace rkgrgg
