#include "decwa/density.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "decwa/error.hpp"

namespace decwa {

KernelKind parse_kernel(std::string_view name) {
  if (name == "gaussian") return KernelKind::gaussian;
  if (name == "uniform") return KernelKind::uniform;
  if (name == "triangular") return KernelKind::triangular;
  throw ConfigError("unknown kernel '" + std::string(name) + "'");
}

std::string_view to_string(KernelKind kernel) {
  switch (kernel) {
  case KernelKind::gaussian: return "gaussian";
  case KernelKind::uniform: return "uniform";
  case KernelKind::triangular: return "triangular";
  }
  return "unknown";
}

double kernel_value(KernelKind kernel, double x) {
  switch (kernel) {
  case KernelKind::gaussian:
    return std::exp(-0.5 * x * x) * (std::numbers::inv_sqrtpi / std::numbers::sqrt2);
  case KernelKind::uniform:
    return std::abs(x) <= 1.0 ? 0.5 : 0.0;
  case KernelKind::triangular: {
    const double ax = std::abs(x);
    return ax <= 1.0 ? 1.0 - ax : 0.0;
  }
  }
  return 0.0;
}

double kernel_margin(KernelKind kernel) {
  return kernel == KernelKind::gaussian ? 4.0 : 1.0;
}

double kde_value(std::span<const double> samples, double bandwidth, KernelKind kernel,
                 double at) {
  if (samples.empty()) throw PipelineError("density of an empty sample");
  double sum = 0.0;
  for (double a : samples) sum += kernel_value(kernel, (at - a) / bandwidth);
  return sum / (static_cast<double>(samples.size()) * bandwidth);
}

double DensityCurve::integral() const {
  double total = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    total += 0.5 * (values[i] + values[i - 1]) * (grid[i] - grid[i - 1]);
  }
  return total;
}

DensityCurve estimate_density(std::span<const double> distances, double bandwidth,
                              KernelKind kernel, std::size_t grid_size) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw ConfigError("bandwidth must be positive and finite");
  }
  if (grid_size < kMinGridSize) {
    throw ConfigError("grid size must be at least " + std::to_string(kMinGridSize));
  }
  if (distances.empty()) throw PipelineError("no edge distances to estimate a density from");

  const auto [lo_it, hi_it] = std::minmax_element(distances.begin(), distances.end());
  const double margin = kernel_margin(kernel) * bandwidth;
  const double lo = *lo_it - margin;
  const double hi = *hi_it + margin;
  const double step = (hi - lo) / static_cast<double>(grid_size - 1);

  DensityCurve curve;
  curve.bandwidth = bandwidth;
  curve.sample_count = distances.size();
  curve.grid.resize(grid_size);
  curve.values.resize(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    curve.grid[i] = i + 1 == grid_size ? hi : lo + step * static_cast<double>(i);
    curve.values[i] = kde_value(distances, bandwidth, kernel, curve.grid[i]);
  }
  return curve;
}

namespace {

struct Run {
  std::size_t first;
  std::size_t last;
  double value;
};

std::vector<Run> equal_value_runs(const std::vector<double>& values) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!runs.empty() && runs.back().value == values[i]) {
      runs.back().last = i;
    } else {
      runs.push_back({i, i, values[i]});
    }
  }
  return runs;
}

} // namespace

std::vector<Extremum> locate_extrema(const DensityCurve& curve) {
  const auto runs = equal_value_runs(curve.values);
  std::vector<Extremum> extrema;
  if (runs.size() < 2) return extrema;

  const auto center = [&](const Run& r) { return curve.grid[(r.first + r.last) / 2]; };
  if (runs[1].value < runs[0].value) {
    extrema.push_back({center(runs[0]), ExtremumKind::maximum});
  }
  for (std::size_t i = 1; i + 1 < runs.size(); ++i) {
    const double left = runs[i - 1].value;
    const double right = runs[i + 1].value;
    const double v = runs[i].value;
    if (v > left && v > right) {
      extrema.push_back({center(runs[i]), ExtremumKind::maximum});
    } else if (v < left && v < right) {
      extrema.push_back({center(runs[i]), ExtremumKind::minimum});
    }
  }
  const std::size_t last = runs.size() - 1;
  if (runs[last - 1].value < runs[last].value) {
    extrema.push_back({center(runs[last]), ExtremumKind::maximum});
  }
  return extrema;
}

std::vector<double> derive_thresholds(std::span<const Extremum> extrema) {
  std::vector<double> thresholds;
  for (std::size_t i = 1; i < extrema.size(); ++i) {
    const double mid = 0.5 * (extrema[i - 1].position + extrema[i].position);
    if (mid > 0.0) thresholds.push_back(mid);
  }
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  return thresholds;
}

namespace {

void append_number(std::string& out, double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 6);
  out.append(buffer, result.ptr);
}

} // namespace

void write_curve(std::ostream& out, const DensityCurve& curve) {
  std::string text;
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    append_number(text, curve.grid[i]);
    text.push_back(',');
    append_number(text, curve.values[i]);
    text.push_back('\n');
  }
  out << text;
}

} // namespace decwa
