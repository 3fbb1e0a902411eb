#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dropgraph/complexity.hpp"
#include "dropgraph/error.hpp"
#include "oracles.hpp"

using namespace dropgraph;

namespace {

BinaryMask stripes(int w, int h) {
  BinaryMask m(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) m(x, y) = x % 2;
  return m;
}

MrHistogram bins(std::initializer_list<std::uint64_t> counts) {
  MrHistogram h;
  int i = 0;
  for (auto c : counts) {
    h.counts[i++] = c;
    h.total += c;
  }
  return h;
}

double power_at(const std::vector<SpectrumBin>& s, int bin) {
  for (const auto& b : s)
    if (b.bin == bin) return b.power;
  return -1.0;
}

}  // namespace

TEST_CASE("compressibility orders constant below random and is deterministic") {
  std::mt19937_64 rng(61);
  const auto noise = oracle::random_mask(rng, 128, 128, 0.5);
  const BinaryMask flat(128, 128);
  for (Codec codec : {Codec::kPng, Codec::kJpeg}) {
    CHECK(compressibility(flat, codec) < compressibility(noise, codec));
    CHECK(compressibility(noise, codec) == compressibility(noise, codec));
  }
  CHECK(compressibility(noise, Codec::kJpeg, 50) < compressibility(noise, Codec::kJpeg, 95));
}

TEST_CASE("mr_histogram examples") {
  const auto zero = mr_histogram(BinaryMask(6, 5));
  CHECK(zero.counts[0] == 12);
  CHECK(zero.total == 12);
  const auto one = mr_histogram(BinaryMask(6, 5, 1));
  CHECK(one.counts[511] == 12);
  for (int w = 4; w <= 9; ++w) {
    const auto h = mr_histogram(stripes(w, 5));
    int nonzero = 0;
    for (auto c : h.counts) nonzero += c != 0;
    CHECK(nonzero == 2);
    CHECK(h.counts[0b010010010] + h.counts[0b101101101] == h.total);
  }
  CHECK_THROWS_AS(mr_histogram(BinaryMask(2, 5)), Error);
  CHECK_THROWS_AS(mr_histogram(BinaryMask(5, 2)), Error);
}

TEST_CASE("window_code reads row-major with the top-left as MSB") {
  BinaryMask m(3, 3);
  m(0, 0) = 1;
  CHECK(window_code(m, 0, 0) == 256);
  m(0, 0) = 0;
  m(2, 2) = 1;
  CHECK(window_code(m, 0, 0) == 1);
  m(1, 0) = 1;
  CHECK(window_code(m, 0, 0) == 129);
}

TEST_CASE("morphological richness") {
  CHECK(morphological_richness(mr_histogram(BinaryMask(10, 10))) == 1.0 / 512.0);
  CHECK(morphological_richness(mr_histogram(BinaryMask(10, 10, 1))) == 1.0 / 512.0);
  CHECK(morphological_richness(mr_histogram(stripes(10, 10))) == 2.0 / 512.0);
  std::mt19937_64 rng(67);
  for (int t = 0; t < 10; ++t) {
    const auto m = oracle::random_mask(rng, 32, 32, 0.2 + 0.06 * t);
    CHECK(morphological_richness(mr_histogram(m)) == oracle::distinct_windows(m) / 512.0);
  }
  CHECK(morphological_richness(mr_histogram(oracle::random_mask(rng, 64, 64, 0.5))) > 1.0 / 512.0);
}

TEST_CASE("mr_entropy") {
  CHECK(mr_entropy(bins({7})) == 0.0);
  CHECK(mr_entropy(bins({3, 3})) == 1.0);
  CHECK(mr_entropy(bins({1, 1, 1, 1})) == 2.0);
  CHECK(mr_entropy(bins({1, 3})) == doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("power spectrum of constants and tones") {
  const auto flat = power_spectrum(std::vector<double>(16, 0.7));
  CHECK(flat.size() == 9);
  for (const auto& b : flat) CHECK(b.power == 0.0);
  CHECK_FALSE(dominating_frequency(flat));

  std::vector<double> tone(64);
  for (int t = 0; t < 64; ++t) tone[t] = std::sin(2.0 * std::numbers::pi * 8.0 * t / 64.0);
  const auto s = power_spectrum(tone);
  REQUIRE(s.size() == 33);
  CHECK(dominating_frequency(s) == 8);
  for (const auto& b : s)
    if (b.bin != 8) CHECK(b.power < 1e-18 * power_at(s, 8) + 1e-20);

  std::vector<double> mix(64);
  for (int t = 0; t < 64; ++t)
    mix[t] = 2.0 * std::sin(2.0 * std::numbers::pi * 3.0 * t / 64.0) + std::sin(2.0 * std::numbers::pi * 8.0 * t / 64.0);
  const auto m = power_spectrum(mix);
  CHECK(power_at(m, 3) > power_at(m, 8));
  CHECK(power_at(m, 3) == doctest::Approx(4.0 * power_at(m, 8)).epsilon(1e-9));
  CHECK(dominating_frequency(m) == 3);

  CHECK_THROWS_AS(power_spectrum({1.0}), Error);
}

TEST_CASE("Parseval holds for random series") {
  std::mt19937_64 rng(71);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    const int n = 8 + t * 3;
    std::vector<double> s(n);
    for (auto& v : s) v = g(rng);
    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= n;
    double energy = 0.0;
    for (double v : s) energy += (v - mean) * (v - mean);
    const auto spec = power_spectrum(s);
    double total = 0.0;
    for (const auto& b : spec) {
      const bool unpaired = b.bin == 0 || (n % 2 == 0 && b.bin == n / 2);
      total += (unpaired ? 1.0 : 2.0) * b.power;
    }
    CHECK(std::abs(total / n - energy) <= 1e-9 * energy);
  }
}

TEST_CASE("dominating_frequency ties and errors") {
  std::vector<SpectrumBin> s{{0, 9.0}, {1, 0.5}, {2, 3.0}, {3, 1.0}, {4, 0.0}, {5, 3.0}};
  CHECK(dominating_frequency(s) == 2);
  CHECK_THROWS_AS(dominating_frequency({}), Error);
}

TEST_CASE("mr_distance_matrix") {
  const auto h0 = mr_histogram(BinaryMask(8, 8));
  const auto h1 = mr_histogram(BinaryMask(8, 8, 1));
  const auto d = mr_distance_matrix({h0, h1, h0});
  REQUIRE(d.size() == 3);
  CHECK(d[0][0] == 0.0);
  CHECK(d[0][2] == 0.0);
  CHECK(d[0][1] == std::sqrt(2.0));
  CHECK(d[1][0] == d[0][1]);
  CHECK_THROWS_AS(mr_distance_matrix({h0}), Error);

  std::mt19937_64 rng(73);
  std::vector<MrHistogram> hs;
  for (int i = 0; i < 6; ++i) hs.push_back(mr_histogram(oracle::random_mask(rng, 20, 20, 0.1 + 0.15 * i)));
  const auto m = mr_distance_matrix(hs);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      CHECK(m[i][j] == m[j][i]);
      for (int k = 0; k < 6; ++k) CHECK(m[i][k] <= m[i][j] + m[j][k] + 1e-12);
    }
}

TEST_CASE("adjacency entropy") {
  Triangulation tri;
  tri.vertices = {{0, 0}, {4, 0}, {0, 3}};
  tri.adjacency = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  CHECK(adjacency_entropy(tri) == doctest::Approx(0.9182958340544896).epsilon(1e-12));

  Triangulation pair;
  pair.vertices = {{0, 0}, {1, 0}};
  pair.adjacency = {{0, 1}, {1, 0}};
  pair.degenerate = true;
  CHECK(adjacency_entropy(pair) == 1.0);

  Triangulation single;
  single.vertices = {{2, 2}};
  single.adjacency = {{0}};
  single.degenerate = true;
  CHECK(adjacency_entropy(single) == 0.0);
}

TEST_CASE("st_stats") {
  const auto a = st_stats({0.5});
  CHECK(a == StSet{0.5, 0.5, 0.5, 0.0});
  CHECK(st_stats({0.0, 1.0}) == StSet{1.0, 0.0, 0.5, 0.5});
  const auto c = st_stats({1, 2, 3, 4});
  CHECK(c.mean == 2.5);
  CHECK(c.std == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
  CHECK_THROWS_AS(st_stats({}), Error);
}
