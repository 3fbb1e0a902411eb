#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "dropgraph/complexity.hpp"
#include "dropgraph/graphs.hpp"
#include "dropgraph/skeletonize.hpp"
#include "dropgraph/synthgen.hpp"

using namespace dropgraph;

namespace {

BinaryMask corpus_mask(std::uint64_t seed) { return generate_mask(random_spec(seed)).first; }

std::vector<Pixel> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(0, 10000);
  std::set<Pixel> seen;
  std::vector<Pixel> pts;
  while (pts.size() < n) {
    const Pixel p{c(rng), c(rng)};
    if (seen.insert(p).second) pts.push_back(p);
  }
  return pts;
}

void BM_DistanceTransform(benchmark::State& state) {
  const auto mask = corpus_mask(1);
  const auto b = boundary(mask, StructuringElement(1));
  for (auto _ : state) benchmark::DoNotOptimize(distance_transform(mask, b));
}
BENCHMARK(BM_DistanceTransform)->Unit(benchmark::kMillisecond);

void BM_Skeletonize(benchmark::State& state) {
  const auto mask = corpus_mask(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(skeletonize(mask));
}
BENCHMARK(BM_Skeletonize)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MrHistogram(benchmark::State& state) {
  const auto mask = corpus_mask(4);
  for (auto _ : state) benchmark::DoNotOptimize(mr_histogram(mask));
}
BENCHMARK(BM_MrHistogram)->Unit(benchmark::kMicrosecond);

void BM_Delaunay(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(delaunay(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Delaunay)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_EuclideanMst(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(euclidean_mst(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EuclideanMst)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_BestGrownTree(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(best_grown_tree(pts));
}
BENCHMARK(BM_BestGrownTree)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
