#include "decwa/partition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>

#include "decwa/error.hpp"

namespace decwa {

PartitionState::PartitionState(std::size_t node_count) : assignment_(node_count, kUnassigned) {}

ClusterId PartitionState::add(std::vector<NodeId> members, std::vector<double> intra_distances) {
  const ClusterId id = next_id_++;
  std::sort(members.begin(), members.end());
  std::sort(intra_distances.begin(), intra_distances.end());
  for (NodeId node : members) assignment_[node] = id;
  clusters_.emplace(id, SubCluster{id, std::move(members), std::move(intra_distances)});
  return id;
}

void PartitionState::merge(ClusterId into, ClusterId from) {
  auto from_it = clusters_.find(from);
  auto& target = clusters_.at(into);
  auto& source = from_it->second;
  for (NodeId node : source.members) assignment_[node] = into;

  std::vector<NodeId> members;
  members.reserve(target.members.size() + source.members.size());
  std::merge(target.members.begin(), target.members.end(), source.members.begin(),
             source.members.end(), std::back_inserter(members));
  std::vector<double> distances;
  distances.reserve(target.intra_distances.size() + source.intra_distances.size());
  std::merge(target.intra_distances.begin(), target.intra_distances.end(),
             source.intra_distances.begin(), source.intra_distances.end(),
             std::back_inserter(distances));
  target.members = std::move(members);
  target.intra_distances = std::move(distances);
  clusters_.erase(from_it);
}

bool PartitionState::is_full_partition() const {
  std::size_t covered = 0;
  for (const auto& [id, cluster] : clusters_) {
    if (cluster.members.empty()) return false;
    for (NodeId node : cluster.members) {
      if (node >= assignment_.size() || assignment_[node] != id) return false;
    }
    covered += cluster.members.size();
  }
  return covered == assignment_.size() &&
         std::none_of(assignment_.begin(), assignment_.end(),
                      [](ClusterId id) { return id == kUnassigned; });
}

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

// Adds one sub-cluster per connected component of `edges` restricted to the
// nodes flagged in `include`, in order of each component's smallest node.
void add_components(PartitionState& state, const std::vector<bool>& include,
                    const std::vector<WeightedEdge>& edges) {
  const std::size_t n = include.size();
  UnionFind sets(n);
  for (const auto& e : edges) sets.unite(e.u, e.v);

  // With smallest-root union, a component's root is its smallest node.
  std::vector<std::vector<NodeId>> members(n);
  std::vector<std::vector<double>> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (include[i]) members[sets.find(i)].push_back(static_cast<NodeId>(i));
  }
  for (const auto& e : edges) weights[sets.find(e.u)].push_back(e.w);
  for (std::size_t root = 0; root < n; ++root) {
    if (!members[root].empty()) state.add(std::move(members[root]), std::move(weights[root]));
  }
}

} // namespace

PartitionState divide(const SpanningForest& forest, std::span<const double> thresholds) {
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i] < thresholds[i - 1])) {
      throw ConfigError("thresholds must be strictly descending");
    }
  }

  const std::size_t n = forest.node_count;
  PartitionState state(n);
  std::vector<WeightedEdge> residual = forest.edges;
  std::vector<bool> in_residual(n, true);

  for (double t : thresholds) {
    std::vector<bool> has_light_edge(n, false);
    for (const auto& e : residual) {
      if (e.w <= t) has_light_edge[e.u] = has_light_edge[e.v] = true;
    }
    std::vector<bool> qualifying(n, false);
    for (std::size_t i = 0; i < n; ++i) qualifying[i] = in_residual[i] && !has_light_edge[i];

    std::vector<WeightedEdge> extracted;
    std::vector<WeightedEdge> next_residual;
    for (const auto& e : residual) {
      if (e.w <= t) {
        next_residual.push_back(e);
      } else if (qualifying[e.u] && qualifying[e.v]) {
        extracted.push_back(e);
      }
      // Heavy edges touching a mixed node are dropped.
    }
    add_components(state, qualifying, extracted);

    in_residual = has_light_edge;
    residual = std::move(next_residual);
  }
  add_components(state, in_residual, residual);
  return state;
}

double wasserstein1_sorted(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return 0.0;
  // Quantile breakpoints i/|a| and j/|b| are compared on the common integer
  // scale |a|*|b|, so interval lengths are exact.
  const auto m = static_cast<std::uint64_t>(a.size());
  const auto n = static_cast<std::uint64_t>(b.size());
  std::uint64_t position = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  double total = 0.0;
  while (i < a.size() && j < b.size()) {
    const std::uint64_t next_a = (i + 1) * n;
    const std::uint64_t next_b = (j + 1) * m;
    const std::uint64_t next = std::min(next_a, next_b);
    total += static_cast<double>(next - position) * std::abs(a[i] - b[j]);
    position = next;
    if (next_a == next) ++i;
    if (next_b == next) ++j;
  }
  return total / (static_cast<double>(m) * static_cast<double>(n));
}

double wasserstein1(std::span<const double> a, std::span<const double> b) {
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return wasserstein1_sorted(sa, sb);
}

AgglomerationMode parse_agglomeration(std::string_view name) {
  if (name == "single-pass" || name == "single_pass") return AgglomerationMode::single_pass;
  if (name == "fixpoint") return AgglomerationMode::fixpoint;
  throw ConfigError("unknown agglomeration mode '" + std::string(name) + "'");
}

std::string_view to_string(AgglomerationMode mode) {
  return mode == AgglomerationMode::single_pass ? "single-pass" : "fixpoint";
}

AgglomerationStats agglomerate(PartitionState& state, const SpanningForest& forest,
                               double lambda, double alpha, AgglomerationMode mode) {
  if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (!(alpha >= 0.0)) throw ConfigError("alpha must be non-negative");
  if (state.node_count() != forest.node_count) {
    throw ConfigError("partition and forest disagree on the node count");
  }

  std::vector<WeightedEdge> order = forest.edges;
  std::sort(order.begin(), order.end(), edge_less);

  AgglomerationStats stats;
  for (;;) {
    ++stats.traversals;
    std::size_t merged_this_pass = 0;
    for (const auto& e : order) {
      const ClusterId cu = state.cluster_of(e.u);
      const ClusterId cv = state.cluster_of(e.v);
      if (cu == cv || e.w > lambda) continue;
      const double ws = wasserstein1_sorted(state.cluster(cu).intra_distances,
                                            state.cluster(cv).intra_distances);
      if (ws > alpha) continue;
      state.merge(std::min(cu, cv), std::max(cu, cv));
      ++merged_this_pass;
    }
    stats.merges += merged_this_pass;
    if (mode == AgglomerationMode::single_pass || merged_this_pass == 0) break;
  }
  return stats;
}

} // namespace decwa
