#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "decwa/graph.hpp"

namespace decwa {

using ClusterId = std::size_t;

struct SubCluster {
  ClusterId id = 0;
  std::vector<NodeId> members;        // ascending
  std::vector<double> intra_distances; // ascending (kept sorted for transport)
};

// Hard partition of the forest's nodes into sub-clusters.
class PartitionState {
public:
  PartitionState() = default;
  explicit PartitionState(std::size_t node_count);

  std::size_t node_count() const { return assignment_.size(); }
  std::size_t cluster_count() const { return clusters_.size(); }
  ClusterId cluster_of(NodeId node) const { return assignment_[node]; }
  std::span<const ClusterId> assignment() const { return assignment_; }
  const std::map<ClusterId, SubCluster>& clusters() const { return clusters_; }
  const SubCluster& cluster(ClusterId id) const { return clusters_.at(id); }

  // Registers a new sub-cluster with the next free id. The caller guarantees
  // members are currently unassigned.
  ClusterId add(std::vector<NodeId> members, std::vector<double> intra_distances);

  // Moves `from` into `into`, concatenating members and distance multisets.
  void merge(ClusterId into, ClusterId from);

  // Every node assigned exactly once and consistent with the member lists.
  bool is_full_partition() const;

private:
  static constexpr ClusterId kUnassigned = std::numeric_limits<ClusterId>::max();

  std::vector<ClusterId> assignment_;
  std::map<ClusterId, SubCluster> clusters_;
  ClusterId next_id_ = 0;
};

// Successive extraction over descending thresholds. At threshold t a node
// qualifies when every residual edge touching it is heavier than t; the
// components of qualifying nodes become sub-clusters, edges <= t form the
// next residual graph and the remaining heavier edges are dropped. Whatever
// is left after the last threshold is split into its components.
PartitionState divide(const SpanningForest& forest, std::span<const double> thresholds);

// Exact first Wasserstein distance between two empirical distributions.
// Returns 0 when either sample is empty.
double wasserstein1(std::span<const double> a, std::span<const double> b);

// Same, for inputs already sorted ascending.
double wasserstein1_sorted(std::span<const double> a, std::span<const double> b);

enum class AgglomerationMode { single_pass, fixpoint };

AgglomerationMode parse_agglomeration(std::string_view name);
std::string_view to_string(AgglomerationMode mode);

struct AgglomerationStats {
  std::size_t merges = 0;
  std::size_t traversals = 0;
};

// Walks the forest edges in edge_less order and merges the two sub-clusters
// an edge links when w <= lambda and ws(D_i, D_j) <= alpha. The surviving
// cluster keeps the smaller id. Fixpoint mode repeats the walk until a full
// pass merges nothing.
AgglomerationStats agglomerate(PartitionState& state, const SpanningForest& forest,
                               double lambda, double alpha, AgglomerationMode mode);

} // namespace decwa
