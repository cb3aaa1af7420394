#pragma once

#include <span>
#include <string_view>

namespace decwa {

// How the outlier label -1 enters pair counting.
enum class OutlierMode {
  one_cluster, // all outliers form one ordinary cluster
  singletons,  // each outlier is its own cluster
};

OutlierMode parse_outlier_mode(std::string_view name);
std::string_view to_string(OutlierMode mode);

// Hubert-Arabie adjusted Rand index from the contingency table. Outlier
// handling applies to both arguments. Returns 1 when both partitions are
// trivially identical (expected index equals max index and they agree).
double adjusted_rand_index(std::span<const int> predicted, std::span<const int> truth,
                           OutlierMode mode = OutlierMode::one_cluster);

double outlier_ratio(std::span<const int> labels);

} // namespace decwa
