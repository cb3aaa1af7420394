#include "decwa/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "decwa/error.hpp"

namespace decwa {

void DecwaParams::validate() const {
  if (k < 1) throw ConfigError("k must be at least 1");
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw ConfigError("bandwidth must be positive and finite");
  }
  if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (!(alpha >= 0.0)) throw ConfigError("alpha must be non-negative");
  if (grid_size < kMinGridSize) {
    throw ConfigError("grid size must be at least " + std::to_string(kMinGridSize));
  }
  if (min_cluster_size < 1) throw ConfigError("min cluster size must be at least 1");
}

namespace {

std::vector<double> edge_weights(const SpanningForest& forest) {
  std::vector<double> weights;
  weights.reserve(forest.edges.size());
  for (const auto& e : forest.edges) weights.push_back(e.w);
  return weights;
}

DensityStage density_stage(const NeighborGraph& graph, const DecwaParams& params) {
  DensityStage stage;
  stage.forest = minimum_spanning_forest(graph);
  stage.distances = edge_weights(stage.forest);
  stage.curve = estimate_density(stage.distances, params.bandwidth, params.kernel,
                                 params.grid_size);
  return stage;
}

ClusteringResult run(const NeighborGraph& graph, const DecwaParams& params) {
  DensityStage stage = density_stage(graph, params);
  const auto extrema = locate_extrema(stage.curve);

  ClusteringResult result;
  auto& diag = result.diagnostics;
  diag.thresholds = derive_thresholds(extrema);
  diag.extrema_count = extrema.size();
  diag.forest_edge_count = stage.forest.edges.size();
  diag.forest_component_count = stage.forest.component_count;

  PartitionState state = divide(stage.forest, diag.thresholds);
  diag.subclusters_after_division = state.cluster_count();
  const auto stats =
      agglomerate(state, stage.forest, params.lambda, params.alpha, params.agglomeration);
  diag.subclusters_after_agglomeration = state.cluster_count();
  diag.merges = stats.merges;
  diag.traversals = stats.traversals;

  result.labels = label_partition(state, params.min_cluster_size);
  int max_label = -1;
  std::size_t outliers = 0;
  for (int label : result.labels) {
    max_label = std::max(max_label, label);
    if (label == kOutlierLabel) ++outliers;
  }
  result.cluster_count = static_cast<std::size_t>(max_label + 1);
  result.outlier_ratio = static_cast<double>(outliers) / static_cast<double>(result.labels.size());
  return result;
}

} // namespace

std::vector<int> label_partition(const PartitionState& state, std::size_t min_cluster_size) {
  const auto assignment = state.assignment();
  std::vector<int> labels(assignment.size(), kOutlierLabel);
  // Numbered in order of each cluster's first member.
  int next_label = 0;
  for (std::size_t node = 0; node < assignment.size(); ++node) {
    const ClusterId id = assignment[node];
    const SubCluster& cluster = state.cluster(id);
    if (cluster.members.size() < min_cluster_size) continue;
    if (cluster.members.front() == node) {
      for (NodeId member : cluster.members) labels[member] = next_label;
      ++next_label;
    }
  }
  return labels;
}

DensityStage estimate_forest_density(std::span<const Point> points, const DecwaParams& params) {
  params.validate();
  return density_stage(build_knn_graph(points, params.k, params.metric), params);
}

ClusteringResult fit(std::span<const Point> points, const DecwaParams& params) {
  params.validate();
  if (points.size() < 2) throw PipelineError("at least two points are required");
  return run(build_knn_graph(points, params.k, params.metric), params);
}

ClusteringResult fit(const NeighborTable& table, const DecwaParams& params) {
  params.validate();
  if (params.metric != table.metric()) {
    throw ConfigError("neighbor table was built with a different metric");
  }
  return run(table.graph(params.k), params);
}

} // namespace decwa
