#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace decwa {

enum class KernelKind { gaussian, uniform, triangular };

KernelKind parse_kernel(std::string_view name);
std::string_view to_string(KernelKind kernel);

// K(x) for the given kernel; the uniform and triangular kernels have support |x| <= 1.
double kernel_value(KernelKind kernel, double x);

// Half-width of the evaluation padding around the sample range, as a multiple of h.
double kernel_margin(KernelKind kernel);

// KDE of a distance sample evaluated at a single position.
double kde_value(std::span<const double> samples, double bandwidth, KernelKind kernel, double at);

struct DensityCurve {
  std::vector<double> grid;   // strictly ascending, uniform spacing
  std::vector<double> values; // f_h(grid[i]) >= 0
  double bandwidth = 0.0;
  std::size_t sample_count = 0;

  // Trapezoidal rule over the whole grid.
  double integral() const;
};

inline constexpr std::size_t kDefaultGridSize = 1024;
inline constexpr std::size_t kMinGridSize = 16;

// Evaluates the KDE on `grid_size` uniformly spaced points covering
// [min - margin, max + margin] where margin = kernel_margin(kernel) * h.
DensityCurve estimate_density(std::span<const double> distances, double bandwidth,
                              KernelKind kernel, std::size_t grid_size = kDefaultGridSize);

enum class ExtremumKind { maximum, minimum };

struct Extremum {
  double position;
  ExtremumKind kind;

  friend bool operator==(const Extremum&, const Extremum&) = default;
};

// Extrema of the sampled curve in ascending position; kinds alternate and a
// non-empty sequence starts and ends with a maximum.
//
// Runs of equal values are treated as one sample located at the run's
// center. Interior runs are maxima (minima) when both neighboring runs are
// strictly smaller (larger). A run touching either end of the grid can only
// be a maximum, and only when its single neighbor is strictly smaller.
std::vector<Extremum> locate_extrema(const DensityCurve& curve);

// Midpoints of consecutive extrema, strictly descending. Non-positive
// midpoints are dropped since no edge weight can fall below them.
std::vector<double> derive_thresholds(std::span<const Extremum> extrema);

// Two-column "position,value" text, one grid point per line.
void write_curve(std::ostream& out, const DensityCurve& curve);

} // namespace decwa
