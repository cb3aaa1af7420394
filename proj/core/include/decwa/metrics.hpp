#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace decwa {

// One data record. Features are validated as finite by the pipeline entry
// points, not on construction.
class Point {
public:
  Point() = default;
  explicit Point(std::vector<double> features) : features_(std::move(features)) {}
  Point(std::initializer_list<double> features) : features_(features) {}

  std::span<const double> features() const { return features_; }
  std::size_t dimension() const { return features_.size(); }
  double operator[](std::size_t i) const { return features_[i]; }

  friend bool operator==(const Point&, const Point&) = default;

private:
  std::vector<double> features_;
};

enum class MetricKind { euclidean, manhattan, canberra, bray_curtis, cosine };

// Accepts the CLI spellings ("bray-curtis") as well as the enumerator names.
MetricKind parse_metric(std::string_view name);
std::string_view to_string(MetricKind metric);

// Dissimilarity between two points of equal dimension. Only symmetry and
// reflexivity are guaranteed; cosine and Bray-Curtis are not metrics in the
// triangle-inequality sense.
double distance(MetricKind metric, std::span<const double> p, std::span<const double> q);

inline double distance(MetricKind metric, const Point& p, const Point& q) {
  return distance(metric, p.features(), q.features());
}

// Throws DataError unless the set is non-empty, every point has the same
// positive dimension and every feature is finite.
void validate_points(std::span<const Point> points);

} // namespace decwa
