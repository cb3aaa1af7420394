#pragma once

// Brute-force reference implementations used only by tests. None of these
// share code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

struct Edge {
  std::size_t u;
  std::size_t v;
  double w;
};

// Minimum total weight over all spanning trees of a connected graph, by
// enumerating every (n-1)-subset of edges. Returns +inf if none spans.
inline double min_spanning_tree_weight(std::size_t n, const std::vector<Edge>& edges) {
  const std::size_t m = edges.size();
  const std::size_t pick = n - 1;
  double best = std::numeric_limits<double>::infinity();
  if (pick > m) return best;
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(pick), true);
  do {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    bool acyclic = true;
    double total = 0.0;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!mask[i]) continue;
      const auto a = find(edges[i].u);
      const auto b = find(edges[i].v);
      if (a == b) {
        acyclic = false;
      } else {
        parent[a] = b;
        total += edges[i].w;
      }
    }
    // n-1 acyclic edges on n nodes always span.
    if (acyclic) best = std::min(best, total);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

// Hungarian algorithm (shortest augmenting path, O(n^3)) on a square cost matrix.
inline double min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  double total = 0.0;
  for (std::size_t j = 1; j <= n; ++j) total += cost[p[j] - 1][j - 1];
  return total;
}

// Optimal transport between uniform empirical measures on a and b with cost
// |x - y|. With integer masses |b| per a-point and |a| per b-point the
// transportation polytope has integral vertices, so the LP optimum equals an
// assignment between |a|*|b| replicated points.
inline double transport_lp(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> left, right;
  for (double x : a) left.insert(left.end(), b.size(), x);
  for (double y : b) right.insert(right.end(), a.size(), y);
  std::vector<std::vector<double>> cost(left.size(), std::vector<double>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) cost[i][j] = std::abs(left[i] - right[j]);
  }
  return min_cost_assignment(cost) / static_cast<double>(left.size());
}

// ARI from the four pair-agreement counts over all C(n,2) point pairs.
inline double pair_counting_ari(const std::vector<int>& x, const std::vector<int>& y) {
  double both = 0, only_x = 0, only_y = 0, neither = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const bool sx = x[i] == x[j];
      const bool sy = y[i] == y[j];
      if (sx && sy) ++both;
      else if (sx) ++only_x;
      else if (sy) ++only_y;
      else ++neither;
    }
  }
  const double num = 2.0 * (both * neither - only_x * only_y);
  const double den = (both + only_x) * (only_x + neither) + (both + only_y) * (only_y + neither);
  return den == 0.0 ? 1.0 : num / den;
}

// Indices of the k nearest points to `i` under a full distance matrix,
// ties broken by smaller index.
inline std::vector<std::size_t> nearest(const std::vector<std::vector<double>>& dist,
                                        std::size_t i, std::size_t k) {
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < dist.size(); ++j) {
    if (j != i) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dist[i][a] < dist[i][b]; });
  order.resize(k);
  return order;
}

} // namespace oracle
