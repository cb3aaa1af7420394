#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "decwa/metrics.hpp"

namespace testing_support {

// Two isotropic Gaussian blobs of `per_blob` points each, centers `gap` apart on x.
inline std::vector<decwa::Point> two_blobs(std::size_t per_blob, double gap, double sigma,
                                           std::uint64_t seed, std::vector<int>* truth = nullptr) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<decwa::Point> points;
  for (int blob = 0; blob < 2; ++blob) {
    for (std::size_t i = 0; i < per_blob; ++i) {
      points.push_back(decwa::Point{blob * gap + noise(rng), noise(rng)});
      if (truth) truth->push_back(blob);
    }
  }
  return points;
}

inline std::vector<decwa::Point> uniform_points(std::size_t n, std::size_t dim,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<decwa::Point> points;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> f(dim);
    for (auto& x : f) x = unit(rng);
    points.emplace_back(std::move(f));
  }
  return points;
}

class TempDir {
public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("decwa-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
  std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string points_csv(const std::vector<decwa::Point>& points,
                              const std::vector<int>* labels = nullptr) {
  std::string text;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t d = 0; d < points[i].dimension(); ++d) {
      if (d > 0) text += ',';
      text += std::to_string(points[i][d]);
    }
    if (labels) text += ',' + std::to_string((*labels)[i]);
    text += '\n';
  }
  return text;
}

} // namespace testing_support
