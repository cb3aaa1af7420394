#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "decwa/decwa.hpp"

namespace {

std::vector<decwa::Point> blobs(std::size_t n, std::size_t dim) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<decwa::Point> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> f(dim);
    for (auto& x : f) x = noise(rng) + static_cast<double>(i % 4) * 8.0;
    points.emplace_back(std::move(f));
  }
  return points;
}

std::vector<double> sample(std::size_t n) {
  std::mt19937_64 rng(7);
  std::gamma_distribution<double> g(2.0, 1.0);
  std::vector<double> out(n);
  for (auto& x : out) x = g(rng);
  return out;
}

void BM_KnnGraph(benchmark::State& state) {
  const auto points = blobs(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decwa::build_knn_graph(points, 10, decwa::MetricKind::euclidean));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KnnGraph)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

void BM_SpanningForest(benchmark::State& state) {
  const auto graph = decwa::build_knn_graph(blobs(static_cast<std::size_t>(state.range(0)), 4),
                                            10, decwa::MetricKind::euclidean);
  for (auto _ : state) benchmark::DoNotOptimize(decwa::minimum_spanning_forest(graph));
}
BENCHMARK(BM_SpanningForest)->Arg(1024)->Arg(4096);

void BM_EstimateDensity(benchmark::State& state) {
  const auto distances = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        decwa::estimate_density(distances, 0.1, decwa::KernelKind::gaussian));
  }
}
BENCHMARK(BM_EstimateDensity)->Arg(256)->Arg(2048);

void BM_Wasserstein(benchmark::State& state) {
  const auto a = sample(static_cast<std::size_t>(state.range(0)));
  auto b = sample(static_cast<std::size_t>(state.range(0)) / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(decwa::wasserstein1(a, b));
}
BENCHMARK(BM_Wasserstein)->Arg(64)->Arg(1024);

void BM_Fit(benchmark::State& state) {
  const auto points = blobs(static_cast<std::size_t>(state.range(0)), 2);
  decwa::DecwaParams params;
  params.bandwidth = 0.05;
  for (auto _ : state) benchmark::DoNotOptimize(decwa::fit(points, params));
}
BENCHMARK(BM_Fit)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
