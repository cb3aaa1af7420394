#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "decwa/metrics.hpp"

namespace decwa {

using NodeId = std::uint32_t;

struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double w = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Strict weak order on (w, min(u,v), max(u,v)). Used both for Kruskal and for
// the agglomeration traversal.
bool edge_less(const WeightedEdge& a, const WeightedEdge& b);

// Undirected graph; every stored edge has u < v and unordered pairs are unique.
struct NeighborGraph {
  std::size_t node_count = 0;
  std::vector<WeightedEdge> edges;
};

struct SpanningForest {
  std::size_t node_count = 0;
  // Sorted by edge_less (Kruskal acceptance order).
  std::vector<WeightedEdge> edges;
  // Dense component index per node, numbered in order of each component's
  // smallest node.
  std::vector<std::size_t> component_ids;
  std::size_t component_count = 0;

  double total_weight() const;
};

// Per-node neighbor lists sorted by (distance, index), truncated to `depth`.
// Lets several graphs with k <= depth be built from one O(n^2) pass.
class NeighborTable {
public:
  struct Entry {
    NodeId node;
    double distance;
  };

  NeighborTable(std::span<const Point> points, std::size_t depth, MetricKind metric);

  std::size_t node_count() const { return node_count_; }
  std::size_t depth() const { return depth_; }
  MetricKind metric() const { return metric_; }
  std::span<const Entry> neighbors(NodeId node) const {
    return {entries_.data() + static_cast<std::size_t>(node) * depth_, depth_};
  }

  // Union-symmetrized k-NN graph, 1 <= k <= depth.
  NeighborGraph graph(std::size_t k) const;

private:
  std::size_t node_count_;
  std::size_t depth_;
  MetricKind metric_;
  std::vector<Entry> entries_;
};

// k-nearest-neighbor graph symmetrized by union. Ties at the k-th distance
// go to the smaller node index. Requires n >= 2 and 1 <= k <= n-1.
NeighborGraph build_knn_graph(std::span<const Point> points, std::size_t k, MetricKind metric);

// Kruskal with union-find; yields one tree per connected component.
SpanningForest minimum_spanning_forest(const NeighborGraph& graph);

} // namespace decwa
