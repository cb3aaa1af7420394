#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "decwa/density.hpp"
#include "decwa/graph.hpp"
#include "decwa/metrics.hpp"
#include "decwa/partition.hpp"

namespace decwa {

struct DecwaParams {
  std::size_t k = 10;
  double bandwidth = 0.1;
  KernelKind kernel = KernelKind::gaussian;
  double lambda = 1.0;
  double alpha = 0.1;
  MetricKind metric = MetricKind::euclidean;
  std::size_t grid_size = kDefaultGridSize;
  std::size_t min_cluster_size = 3;
  AgglomerationMode agglomeration = AgglomerationMode::single_pass;
  // Recorded with results; the pipeline itself draws no random numbers.
  std::uint64_t seed = 0;

  // Throws ConfigError on out-of-range fields. `k` is checked against n at fit time.
  void validate() const;
};

inline constexpr int kOutlierLabel = -1;

struct FitDiagnostics {
  std::vector<double> thresholds;
  std::size_t extrema_count = 0;
  std::size_t forest_edge_count = 0;
  std::size_t forest_component_count = 0;
  std::size_t subclusters_after_division = 0;
  std::size_t subclusters_after_agglomeration = 0;
  std::size_t merges = 0;
  std::size_t traversals = 0;
};

struct ClusteringResult {
  std::vector<int> labels; // dense from 0 in order of first member, -1 = outlier
  std::size_t cluster_count = 0;
  double outlier_ratio = 0.0;
  FitDiagnostics diagnostics;
};

// Intermediate products of the first two steps, exposed for the curve
// emission command and for tests.
struct DensityStage {
  SpanningForest forest;
  std::vector<double> distances; // forest edge weights
  DensityCurve curve;
};

DensityStage estimate_forest_density(std::span<const Point> points, const DecwaParams& params);

// graph -> forest -> density -> thresholds -> division -> agglomeration ->
// outlier relabeling of clusters smaller than min_cluster_size.
ClusteringResult fit(std::span<const Point> points, const DecwaParams& params);

// Same pipeline reusing a precomputed neighbor table (params.k <= table.depth()
// and params.metric == table.metric()).
ClusteringResult fit(const NeighborTable& table, const DecwaParams& params);

// Final labeling step, exposed separately so the outlier policy can be
// checked against a fixed partition.
std::vector<int> label_partition(const PartitionState& state, std::size_t min_cluster_size);

} // namespace decwa
