#include "decwa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "decwa/error.hpp"

namespace decwa {

MetricKind parse_metric(std::string_view name) {
  if (name == "euclidean") return MetricKind::euclidean;
  if (name == "manhattan") return MetricKind::manhattan;
  if (name == "canberra") return MetricKind::canberra;
  if (name == "bray-curtis" || name == "bray_curtis") return MetricKind::bray_curtis;
  if (name == "cosine") return MetricKind::cosine;
  throw ConfigError("unknown metric '" + std::string(name) + "'");
}

std::string_view to_string(MetricKind metric) {
  switch (metric) {
  case MetricKind::euclidean: return "euclidean";
  case MetricKind::manhattan: return "manhattan";
  case MetricKind::canberra: return "canberra";
  case MetricKind::bray_curtis: return "bray-curtis";
  case MetricKind::cosine: return "cosine";
  }
  return "unknown";
}

namespace {

void check_finite(double x) {
  if (!std::isfinite(x)) throw DataError("non-finite feature value");
}

double cosine_distance(std::span<const double> p, std::span<const double> q) {
  double dot = 0.0;
  double pp = 0.0;
  double qq = 0.0;
  bool identical = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    check_finite(p[i]);
    check_finite(q[i]);
    dot += p[i] * q[i];
    pp += p[i] * p[i];
    qq += q[i] * q[i];
    identical = identical && p[i] == q[i];
  }
  if (identical) return 0.0;
  if (pp == 0.0 || qq == 0.0) return (pp == 0.0 && qq == 0.0) ? 0.0 : 1.0;
  // pp * qq and qq * pp round identically, which keeps the result symmetric.
  const double d = 1.0 - dot / (std::sqrt(pp) * std::sqrt(qq));
  return std::clamp(d, 0.0, 2.0);
}

} // namespace

double distance(MetricKind metric, std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw ConfigError("dimension mismatch: " + std::to_string(p.size()) + " vs " +
                      std::to_string(q.size()));
  }
  switch (metric) {
  case MetricKind::euclidean: {
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      check_finite(p[i]);
      check_finite(q[i]);
      const double d = p[i] - q[i];
      sum += d * d;
    }
    return std::sqrt(sum);
  }
  case MetricKind::manhattan: {
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      check_finite(p[i]);
      check_finite(q[i]);
      sum += std::abs(p[i] - q[i]);
    }
    return sum;
  }
  case MetricKind::canberra: {
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      check_finite(p[i]);
      check_finite(q[i]);
      const double denom = std::abs(p[i]) + std::abs(q[i]);
      if (denom > 0.0) sum += std::abs(p[i] - q[i]) / denom;
    }
    return sum;
  }
  case MetricKind::bray_curtis: {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      check_finite(p[i]);
      check_finite(q[i]);
      num += std::abs(p[i] - q[i]);
      den += std::abs(p[i] + q[i]);
    }
    if (num == 0.0) return 0.0;
    // Mixed-sign records can cancel in the denominator.
    if (den == 0.0) return 1.0;
    return num / den;
  }
  case MetricKind::cosine:
    return cosine_distance(p, q);
  }
  throw ConfigError("unknown metric");
}

void validate_points(std::span<const Point> points) {
  if (points.empty()) throw DataError("empty dataset");
  const std::size_t dim = points.front().dimension();
  if (dim == 0) throw DataError("points must have at least one feature");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dimension() != dim) {
      throw DataError("point " + std::to_string(i) + " has dimension " +
                      std::to_string(points[i].dimension()) + ", expected " +
                      std::to_string(dim));
    }
    for (double x : points[i].features()) {
      if (!std::isfinite(x)) {
        throw DataError("point " + std::to_string(i) + " has a non-finite feature");
      }
    }
  }
}

} // namespace decwa
