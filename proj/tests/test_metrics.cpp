#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "decwa/error.hpp"
#include "decwa/metrics.hpp"

using decwa::MetricKind;
using decwa::Point;

namespace {

constexpr MetricKind kAllMetrics[] = {MetricKind::euclidean, MetricKind::manhattan,
                                      MetricKind::canberra, MetricKind::bray_curtis,
                                      MetricKind::cosine};

Point random_point(std::mt19937_64& rng, std::size_t dim, bool non_negative) {
  std::uniform_real_distribution<double> value(non_negative ? 0.0 : -5.0, 5.0);
  std::vector<double> f(dim);
  for (auto& x : f) x = value(rng);
  return Point(std::move(f));
}

} // namespace

TEST(Distance, Examples) {
  EXPECT_DOUBLE_EQ(decwa::distance(MetricKind::euclidean, Point{0, 0}, Point{3, 4}), 5.0);
  EXPECT_EQ(decwa::distance(MetricKind::canberra, Point{1, 2, 3}, Point{1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(decwa::distance(MetricKind::cosine, Point{1, 0}, Point{0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(decwa::distance(MetricKind::bray_curtis, Point{1, 1}, Point{3, 1}), 2.0 / 6.0);
  EXPECT_DOUBLE_EQ(decwa::distance(MetricKind::manhattan, Point{1, -1}, Point{-2, 3}), 7.0);
}

TEST(Distance, DegenerateConventions) {
  EXPECT_EQ(decwa::distance(MetricKind::canberra, Point{0, 0}, Point{0, 0}), 0.0);
  // Zero-zero terms contribute nothing: only the second coordinate counts.
  EXPECT_DOUBLE_EQ(decwa::distance(MetricKind::canberra, Point{0, 1}, Point{0, 3}), 0.5);
  EXPECT_EQ(decwa::distance(MetricKind::bray_curtis, Point{0, 0}, Point{0, 0}), 0.0);
  EXPECT_EQ(decwa::distance(MetricKind::cosine, Point{0, 0}, Point{0, 0}), 0.0);
  EXPECT_EQ(decwa::distance(MetricKind::cosine, Point{0, 0}, Point{1, 2}), 1.0);
  EXPECT_EQ(decwa::distance(MetricKind::cosine, Point{0.1, 0.7, 0.3}, Point{0.1, 0.7, 0.3}), 0.0);
}

TEST(Distance, Errors) {
  EXPECT_THROW(decwa::distance(MetricKind::euclidean, Point{1, 2}, Point{1, 2, 3}),
               decwa::ConfigError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  for (auto metric : kAllMetrics) {
    EXPECT_THROW(decwa::distance(metric, Point{nan, 1}, Point{1, 1}), decwa::DataError);
    EXPECT_THROW(decwa::distance(metric, Point{1, 1}, Point{1, inf}), decwa::DataError);
  }
}

TEST(Distance, ParseNames) {
  EXPECT_EQ(decwa::parse_metric("bray-curtis"), MetricKind::bray_curtis);
  EXPECT_EQ(decwa::parse_metric("bray_curtis"), MetricKind::bray_curtis);
  for (auto metric : kAllMetrics) EXPECT_EQ(decwa::parse_metric(decwa::to_string(metric)), metric);
  EXPECT_THROW(decwa::parse_metric("chebyshev"), decwa::ConfigError);
}

TEST(DistanceProperty, NonNegativeSymmetricReflexive) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t dim = 1 + trial % 7;
    for (auto metric : kAllMetrics) {
      // Canberra and Bray-Curtis are meant for non-negative features.
      const bool non_negative =
          metric == MetricKind::canberra || metric == MetricKind::bray_curtis;
      const Point p = random_point(rng, dim, non_negative);
      const Point q = random_point(rng, dim, non_negative);
      const double d = decwa::distance(metric, p, q);
      EXPECT_GE(d, 0.0);
      EXPECT_TRUE(std::isfinite(d));
      EXPECT_EQ(d, decwa::distance(metric, q, p));
      EXPECT_EQ(decwa::distance(metric, p, p), 0.0);
    }
  }
}

TEST(DistanceProperty, TriangleInequalityForMetrics) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t dim = 1 + trial % 5;
    const Point a = random_point(rng, dim, false);
    const Point b = random_point(rng, dim, false);
    const Point c = random_point(rng, dim, false);
    for (auto metric : {MetricKind::euclidean, MetricKind::manhattan}) {
      EXPECT_LE(decwa::distance(metric, a, c),
                decwa::distance(metric, a, b) + decwa::distance(metric, b, c) + 1e-12);
    }
  }
}

TEST(ValidatePoints, RejectsBadInput) {
  EXPECT_THROW(decwa::validate_points({}), decwa::DataError);
  const std::vector<Point> ragged{Point{1, 2}, Point{1}};
  EXPECT_THROW(decwa::validate_points(ragged), decwa::DataError);
  const std::vector<Point> empty_dim{Point{}, Point{}};
  EXPECT_THROW(decwa::validate_points(empty_dim), decwa::DataError);
  const std::vector<Point> nan{Point{1, std::numeric_limits<double>::quiet_NaN()}};
  EXPECT_THROW(decwa::validate_points(nan), decwa::DataError);
  const std::vector<Point> ok{Point{1, 2}, Point{3, 4}};
  EXPECT_NO_THROW(decwa::validate_points(ok));
}
