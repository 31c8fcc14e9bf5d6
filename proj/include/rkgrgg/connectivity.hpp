#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <json.hpp>

#include "rkgrgg/graph.hpp"

namespace rkgrgg {

/// Disjoint-set forest with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::size_t find(std::size_t v) noexcept;
  /// Returns true when the two sets were distinct.
  bool unite(std::size_t a, std::size_t b) noexcept;
  [[nodiscard]] std::size_t size_of(std::size_t v) noexcept {
    return size_[find(v)];
  }
  [[nodiscard]] std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

/// Component label per node. Labels are canonical: components are numbered
/// 0, 1, ... in order of their smallest node id.
using ComponentLabels = std::vector<std::size_t>;

ComponentLabels components(const Graph& graph);

/// Breadth-first labeling; independent cross-check for components().
ComponentLabels components_oracle(const Graph& graph);

struct ConnectivityReport {
  std::size_t component_count = 0;
  std::size_t largest_component = 0;
  std::size_t isolated_nodes = 0;
  std::size_t min_degree = 0;
  bool is_connected = false;

  friend bool operator==(const ConnectivityReport&,
                         const ConnectivityReport&) = default;
};

ConnectivityReport analyze(const Graph& graph);

/// component size -> number of components of that size.
std::map<std::size_t, std::size_t> component_size_histogram(const Graph& graph);

nlohmann::json to_json(const ConnectivityReport& report);

}  // namespace rkgrgg
