#include "decwa/evaluation.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "decwa/error.hpp"

namespace decwa {

OutlierMode parse_outlier_mode(std::string_view name) {
  if (name == "one-cluster" || name == "one_cluster") return OutlierMode::one_cluster;
  if (name == "singletons") return OutlierMode::singletons;
  throw ConfigError("unknown outlier mode '" + std::string(name) + "'");
}

std::string_view to_string(OutlierMode mode) {
  return mode == OutlierMode::one_cluster ? "one-cluster" : "singletons";
}

namespace {

using Count = std::uint64_t;

Count pairs(Count n) { return n * (n - 1) / 2; }

// Maps labels to a key space where, in singleton mode, each -1 gets a
// unique key that cannot collide with a real label.
std::int64_t label_key(int label, std::size_t index, OutlierMode mode) {
  if (label == -1 && mode == OutlierMode::singletons) {
    return std::numeric_limits<std::int64_t>::min() + static_cast<std::int64_t>(index);
  }
  return label;
}

} // namespace

double adjusted_rand_index(std::span<const int> predicted, std::span<const int> truth,
                           OutlierMode mode) {
  if (predicted.size() != truth.size()) {
    throw ConfigError("label vectors differ in length: " + std::to_string(predicted.size()) +
                      " vs " + std::to_string(truth.size()));
  }
  const std::size_t n = predicted.size();
  if (n < 2) throw ConfigError("ARI needs at least two labels");

  std::map<std::pair<std::int64_t, std::int64_t>, Count> joint;
  std::map<std::int64_t, Count> pred_sizes;
  std::map<std::int64_t, Count> truth_sizes;
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = label_key(predicted[i], i, mode);
    const auto t = label_key(truth[i], i, mode);
    ++joint[{p, t}];
    ++pred_sizes[p];
    ++truth_sizes[t];
  }

  Count index = 0;
  for (const auto& [key, count] : joint) index += pairs(count);
  Count pred_pairs = 0;
  for (const auto& [key, count] : pred_sizes) pred_pairs += pairs(count);
  Count truth_pairs = 0;
  for (const auto& [key, count] : truth_sizes) truth_pairs += pairs(count);

  const auto total_pairs = static_cast<double>(pairs(n));
  const double expected =
      static_cast<double>(pred_pairs) * static_cast<double>(truth_pairs) / total_pairs;
  const double max_index = 0.5 * (static_cast<double>(pred_pairs) + static_cast<double>(truth_pairs));
  // Zero denominator only when both partitions are all-in-one or all-singletons.
  if (max_index == expected) return 1.0;
  return (static_cast<double>(index) - expected) / (max_index - expected);
}

double outlier_ratio(std::span<const int> labels) {
  if (labels.empty()) return 0.0;
  const auto outliers = std::count(labels.begin(), labels.end(), -1);
  return static_cast<double>(outliers) / static_cast<double>(labels.size());
}

} // namespace decwa
