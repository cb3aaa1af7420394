#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "decwa/metrics.hpp"

namespace decwa {

// Column holding integer labels. Negative indices count from the end, so -1
// is the last column.
struct LabelColumn {
  int index = -1;

  // "last", "first" or a zero-based integer (negative counts from the end).
  static LabelColumn parse(std::string_view text);
};

struct Dataset {
  std::vector<Point> points;
  std::optional<std::vector<int>> labels;
};

// Comma-separated numeric rows, optional single header line. Blank lines are
// skipped. Errors name the 1-based line number.
Dataset load_dataset(std::istream& in, bool has_header, std::optional<LabelColumn> label_column);
Dataset load_dataset(const std::filesystem::path& path, bool has_header,
                     std::optional<LabelColumn> label_column);

// One integer per line.
std::vector<int> load_labels(const std::filesystem::path& path);

} // namespace decwa
