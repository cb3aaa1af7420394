#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "decwa/evaluation.hpp"
#include "decwa/pipeline.hpp"

namespace decwa {

enum class Scale { linear, log };

struct RealRange {
  double lo = 0.0;
  double hi = 0.0;
  Scale scale = Scale::linear;
};

struct IntRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct SearchSpace {
  IntRange k{2, 30};
  RealRange bandwidth{1e-3, 10.0, Scale::log};
  RealRange lambda{1e-3, 100.0, Scale::log};
  RealRange alpha{1e-4, 10.0, Scale::log};
  std::vector<KernelKind> kernels{KernelKind::gaussian};
  // Fields not searched (metric, grid size, min cluster size, agglomeration
  // mode, seed) are copied from here into every trial.
  DecwaParams fixed;

  void validate() const;
};

struct TrialRecord {
  DecwaParams params;
  double ari = 0.0;           // -inf when the trial failed
  double outlier_ratio = 0.0; // NaN when the trial failed
  std::size_t trial_index = 0;
};

struct SearchResult {
  TrialRecord best;
  std::vector<TrialRecord> history;
};

struct SearchOptions {
  OutlierMode outlier_mode = OutlierMode::one_cluster;
  // 0 selects std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

// Rounds to six significant digits so that sampled values survive a
// print/parse round trip through the CLI unchanged.
double round_significant(double value);

// The parameter stream of a search: `count` draws from `space` using a
// 64-bit Mersenne Twister seeded with `seed`. Draw order per trial is
// k, bandwidth, lambda, alpha, kernel.
std::vector<DecwaParams> sample_parameters(const SearchSpace& space, std::size_t count,
                                           std::uint64_t seed);

// Random search maximizing ARI against `truth`. Ties keep the lower trial index.
SearchResult random_search(std::span<const Point> points, std::span<const int> truth,
                           const SearchSpace& space, std::size_t iterations, std::uint64_t seed,
                           const SearchOptions& options = {});

} // namespace decwa
