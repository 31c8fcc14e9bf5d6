#include "rkgrgg/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace rkgrgg {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t v) noexcept {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) noexcept {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --sets_;
  return true;
}

namespace {

constexpr std::size_t kUnlabeled = std::numeric_limits<std::size_t>::max();

}  // namespace

ComponentLabels components(const Graph& graph) {
  const std::size_t n = graph.node_count();
  DisjointSets sets(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : graph.neighbors(u)) {
      if (u < v) sets.unite(u, v);
    }
  }
  ComponentLabels labels(n);
  std::vector<std::size_t> root_label(n, kUnlabeled);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = sets.find(v);
    if (root_label[r] == kUnlabeled) root_label[r] = next++;
    labels[v] = root_label[r];
  }
  return labels;
}

ComponentLabels components_oracle(const Graph& graph) {
  const std::size_t n = graph.node_count();
  ComponentLabels labels(n, kUnlabeled);
  std::size_t next = 0;
  std::queue<NodeId> frontier;
  for (NodeId s = 0; s < n; ++s) {
    if (labels[s] != kUnlabeled) continue;
    labels[s] = next;
    frontier.push(s);
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      for (NodeId v : graph.neighbors(u)) {
        if (labels[v] == kUnlabeled) {
          labels[v] = next;
          frontier.push(v);
        }
      }
    }
    ++next;
  }
  return labels;
}

ConnectivityReport analyze(const Graph& graph) {
  const std::size_t n = graph.node_count();
  ConnectivityReport report;
  if (n == 0) return report;
  DisjointSets sets(n);
  report.min_degree = std::numeric_limits<std::size_t>::max();
  for (NodeId u = 0; u < n; ++u) {
    const std::size_t d = graph.degree(u);
    report.min_degree = std::min(report.min_degree, d);
    if (d == 0) ++report.isolated_nodes;
    for (NodeId v : graph.neighbors(u)) {
      if (u < v) sets.unite(u, v);
    }
  }
  report.component_count = sets.set_count();
  for (std::size_t v = 0; v < n; ++v) {
    report.largest_component = std::max(report.largest_component, sets.size_of(v));
  }
  report.is_connected = report.component_count == 1;
  return report;
}

std::map<std::size_t, std::size_t> component_size_histogram(const Graph& graph) {
  const ComponentLabels labels = components(graph);
  std::vector<std::size_t> sizes;
  for (std::size_t label : labels) {
    if (label >= sizes.size()) sizes.resize(label + 1, 0);
    ++sizes[label];
  }
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t s : sizes) ++hist[s];
  return hist;
}

nlohmann::json to_json(const ConnectivityReport& report) {
  return {
      {"component_count", report.component_count},
      {"largest_component", report.largest_component},
      {"isolated_nodes", report.isolated_nodes},
      {"min_degree", report.min_degree},
      {"is_connected", report.is_connected},
  };
}

}  // namespace rkgrgg
