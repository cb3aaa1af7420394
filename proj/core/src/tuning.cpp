#include "decwa/tuning.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "decwa/error.hpp"
#include "parallel.hpp"

namespace decwa {

namespace {

void validate_range(const RealRange& range, const char* name, bool allow_zero) {
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || range.lo > range.hi) {
    throw ConfigError(std::string(name) + " range must satisfy lo <= hi");
  }
  if (range.scale == Scale::log && !(range.lo > 0.0)) {
    throw ConfigError(std::string(name) + " log range must be strictly positive");
  }
  if (allow_zero ? range.lo < 0.0 : !(range.lo > 0.0)) {
    throw ConfigError(std::string(name) + " range must be " +
                      (allow_zero ? "non-negative" : "positive"));
  }
}

class UnitStream {
public:
  explicit UnitStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) from the top 53 bits of one engine output.
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

double draw(UnitStream& stream, const RealRange& range) {
  const double u = stream.next();
  if (range.lo == range.hi) return range.lo;
  double value = 0.0;
  if (range.scale == Scale::log) {
    const double lo = std::log(range.lo);
    const double hi = std::log(range.hi);
    value = std::exp(lo + u * (hi - lo));
  } else {
    value = range.lo + u * (range.hi - range.lo);
  }
  return std::clamp(round_significant(value), range.lo, range.hi);
}

std::size_t draw(UnitStream& stream, const IntRange& range) {
  const double u = stream.next();
  const std::size_t width = range.hi - range.lo + 1;
  return range.lo + std::min(width - 1, static_cast<std::size_t>(u * static_cast<double>(width)));
}

} // namespace

void SearchSpace::validate() const {
  if (k.lo < 1 || k.lo > k.hi) throw ConfigError("k range must satisfy 1 <= lo <= hi");
  validate_range(bandwidth, "bandwidth", false);
  validate_range(lambda, "lambda", false);
  validate_range(alpha, "alpha", true);
  if (kernels.empty()) throw ConfigError("at least one kernel must be allowed");
  fixed.validate();
}

double round_significant(double value) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  char buffer[64];
  const auto written =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 6);
  double rounded = value;
  std::from_chars(buffer, written.ptr, rounded);
  return rounded;
}

std::vector<DecwaParams> sample_parameters(const SearchSpace& space, std::size_t count,
                                           std::uint64_t seed) {
  space.validate();
  UnitStream stream(seed);
  std::vector<DecwaParams> draws;
  draws.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    DecwaParams params = space.fixed;
    params.seed = seed;
    params.k = draw(stream, space.k);
    params.bandwidth = draw(stream, space.bandwidth);
    params.lambda = draw(stream, space.lambda);
    params.alpha = draw(stream, space.alpha);
    const auto kernel_index =
        static_cast<std::size_t>(stream.next() * static_cast<double>(space.kernels.size()));
    params.kernel = space.kernels[std::min(kernel_index, space.kernels.size() - 1)];
    draws.push_back(params);
  }
  return draws;
}

SearchResult random_search(std::span<const Point> points, std::span<const int> truth,
                           const SearchSpace& space, std::size_t iterations, std::uint64_t seed,
                           const SearchOptions& options) {
  if (iterations < 1) throw ConfigError("at least one iteration is required");
  if (truth.size() != points.size()) {
    throw ConfigError("ground truth has " + std::to_string(truth.size()) + " labels for " +
                      std::to_string(points.size()) + " points");
  }
  if (points.size() < 2) throw PipelineError("at least two points are required");
  const auto draws = sample_parameters(space, iterations, seed);

  // Trials with k beyond n-1 fail individually instead of sizing the table.
  const NeighborTable table(points, std::min(space.k.hi, points.size() - 1), space.fixed.metric);

  SearchResult result;
  result.history.resize(iterations);
  detail::parallel_for(iterations, options.threads, [&](std::size_t i) {
    TrialRecord& record = result.history[i];
    record.params = draws[i];
    record.trial_index = i;
    try {
      const ClusteringResult fitted = fit(table, draws[i]);
      record.ari = adjusted_rand_index(fitted.labels, truth, options.outlier_mode);
      record.outlier_ratio = fitted.outlier_ratio;
    } catch (const Error&) {
      record.ari = -std::numeric_limits<double>::infinity();
      record.outlier_ratio = std::numeric_limits<double>::quiet_NaN();
    }
  });

  result.best = result.history.front();
  for (const auto& record : result.history) {
    if (record.ari > result.best.ari) result.best = record;
  }
  return result;
}

} // namespace decwa
