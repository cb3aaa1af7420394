#include "decwa/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "decwa/error.hpp"
#include "parallel.hpp"

namespace decwa {

bool edge_less(const WeightedEdge& a, const WeightedEdge& b) {
  const auto key = [](const WeightedEdge& e) {
    return std::tuple(e.w, std::min(e.u, e.v), std::max(e.u, e.v));
  };
  return key(a) < key(b);
}

double SpanningForest::total_weight() const {
  double total = 0.0;
  for (const auto& e : edges) total += e.w;
  return total;
}

namespace {

// Rows above this size are split across threads.
constexpr std::size_t kParallelRowThreshold = 512;

void check_neighbor_count(std::size_t n, std::size_t k) {
  if (n < 2) throw PipelineError("at least two points are required to build a graph");
  if (k < 1 || k > n - 1) {
    throw ConfigError("k must lie in [1, " + std::to_string(n - 1) + "], got " +
                      std::to_string(k));
  }
}

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

} // namespace

NeighborTable::NeighborTable(std::span<const Point> points, std::size_t depth, MetricKind metric)
    : node_count_(points.size()), depth_(depth), metric_(metric) {
  validate_points(points);
  check_neighbor_count(node_count_, depth_);
  entries_.resize(node_count_ * depth_);

  const auto by_distance_then_index = [](const Entry& a, const Entry& b) {
    return std::tie(a.distance, a.node) < std::tie(b.distance, b.node);
  };
  const auto fill_row = [&](std::size_t i) {
    std::vector<Entry> row;
    row.reserve(node_count_ - 1);
    for (std::size_t j = 0; j < node_count_; ++j) {
      if (j == i) continue;
      row.push_back({static_cast<NodeId>(j), distance(metric_, points[i], points[j])});
    }
    std::partial_sort(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(depth_), row.end(),
                      by_distance_then_index);
    std::copy_n(row.begin(), depth_, entries_.begin() + static_cast<std::ptrdiff_t>(i * depth_));
  };
  detail::parallel_for(node_count_, node_count_ >= kParallelRowThreshold ? 0 : 1, fill_row);
}

NeighborGraph NeighborTable::graph(std::size_t k) const {
  if (k < 1 || k > depth_) {
    throw ConfigError("k must lie in [1, " + std::to_string(depth_) + "], got " +
                      std::to_string(k));
  }
  NeighborGraph graph;
  graph.node_count = node_count_;
  graph.edges.reserve(node_count_ * k);
  for (std::size_t i = 0; i < node_count_; ++i) {
    const auto row = neighbors(static_cast<NodeId>(i));
    for (std::size_t r = 0; r < k; ++r) {
      const auto a = static_cast<NodeId>(i);
      const NodeId b = row[r].node;
      graph.edges.push_back({std::min(a, b), std::max(a, b), row[r].distance});
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end(),
                                [](const WeightedEdge& a, const WeightedEdge& b) {
                                  return a.u == b.u && a.v == b.v;
                                }),
                    graph.edges.end());
  return graph;
}

NeighborGraph build_knn_graph(std::span<const Point> points, std::size_t k, MetricKind metric) {
  check_neighbor_count(points.size(), k);
  return NeighborTable(points, k, metric).graph(k);
}

SpanningForest minimum_spanning_forest(const NeighborGraph& graph) {
  std::vector<WeightedEdge> sorted = graph.edges;
  std::sort(sorted.begin(), sorted.end(), edge_less);

  SpanningForest forest;
  forest.node_count = graph.node_count;
  DisjointSets sets(graph.node_count);
  for (const auto& e : sorted) {
    if (sets.unite(e.u, e.v)) {
      forest.edges.push_back(e);
      if (forest.edges.size() + 1 == graph.node_count) break;
    }
  }

  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root_to_component(graph.node_count, kUnset);
  forest.component_ids.resize(graph.node_count);
  for (std::size_t i = 0; i < graph.node_count; ++i) {
    const std::size_t root = sets.find(i);
    if (root_to_component[root] == kUnset) root_to_component[root] = forest.component_count++;
    forest.component_ids[i] = root_to_component[root];
  }
  return forest;
}

} // namespace decwa
