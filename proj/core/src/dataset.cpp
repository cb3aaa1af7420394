#include "decwa/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "decwa/error.hpp"

namespace decwa {

LabelColumn LabelColumn::parse(std::string_view text) {
  if (text == "last") return {-1};
  if (text == "first") return {0};
  int index = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), index);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("invalid label column '" + std::string(text) +
                      "' (expected 'first', 'last' or an integer index)");
  }
  return {index};
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

double parse_real(std::string_view cell, std::size_t line) {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
    throw DataError(at_line(line) + "non-numeric cell '" + std::string(cell) + "'");
  }
  if (!std::isfinite(value)) throw DataError(at_line(line) + "non-finite value");
  return value;
}

int parse_label(std::string_view cell, std::size_t line) {
  const double value = parse_real(cell, line);
  if (value != std::trunc(value) || std::abs(value) > 1e9) {
    throw DataError(at_line(line) + "label '" + std::string(trim(cell)) + "' is not an integer");
  }
  return static_cast<int>(value);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

} // namespace

Dataset load_dataset(std::istream& in, bool has_header, std::optional<LabelColumn> label_column) {
  Dataset dataset;
  std::vector<int> labels;
  std::size_t columns = 0;
  std::size_t line_number = 0;
  bool header_pending = has_header;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view content = trim(line);
    if (content.empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    const auto cells = split(content);
    if (columns == 0) {
      columns = cells.size();
      if (label_column && columns < 2) {
        throw DataError(at_line(line_number) + "a label column needs at least two columns");
      }
    } else if (cells.size() != columns) {
      throw DataError(at_line(line_number) + "expected " + std::to_string(columns) +
                      " columns, found " + std::to_string(cells.size()));
    }

    std::size_t label_index = columns;
    if (label_column) {
      const int raw = label_column->index;
      const long resolved = raw < 0 ? static_cast<long>(columns) + raw : raw;
      if (resolved < 0 || resolved >= static_cast<long>(columns)) {
        throw ConfigError("label column " + std::to_string(raw) + " out of range for " +
                          std::to_string(columns) + " columns");
      }
      label_index = static_cast<std::size_t>(resolved);
    }

    std::vector<double> features;
    features.reserve(columns);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == label_index) {
        labels.push_back(parse_label(cells[c], line_number));
      } else {
        features.push_back(parse_real(cells[c], line_number));
      }
    }
    dataset.points.emplace_back(std::move(features));
  }
  if (dataset.points.empty()) throw DataError("dataset contains no rows");
  if (label_column) dataset.labels = std::move(labels);
  return dataset;
}

Dataset load_dataset(const std::filesystem::path& path, bool has_header,
                     std::optional<LabelColumn> label_column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return load_dataset(in, has_header, label_column);
}

std::vector<int> load_labels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::vector<int> labels;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto content = trim(line);
    if (content.empty()) continue;
    labels.push_back(parse_label(content, line_number));
  }
  return labels;
}

} // namespace decwa
