#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <set>

#include "dropgraph/error.hpp"
#include "dropgraph/segmentation.hpp"
#include "oracles.hpp"

using namespace dropgraph;

namespace {

GrayImage uniform(int w, int h, double v) { return GrayImage(w, h, v); }

// Reflect-101 index as used by the thresholder.
int reflect(int i, int n) {
  if (n == 1) return 0;
  while (i < 0 || i >= n) i = i < 0 ? -i : 2 * (n - 1) - i;
  return i;
}

// Window mean plus offset, the level a pixel must exceed.
double threshold_level(const GrayImage& img, int x, int y, int window, double offset) {
  const int r = window / 2;
  double sum = 0.0;
  for (int dy = -r; dy <= r; ++dy)
    for (int dx = -r; dx <= r; ++dx) sum += img(reflect(x + dx, img.width()), reflect(y + dy, img.height()));
  return sum / (window * window) + offset;
}

// Pixels whose value ties the level within rounding may go either way.
int oracle_disagreements(const BinaryMask& got, const GrayImage& img, int window, double offset) {
  int bad = 0;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const double level = threshold_level(img, x, y, window, offset);
      if (std::abs(img(x, y) - level) < 1e-12) continue;
      bad += got(x, y) != (img(x, y) > level ? 1 : 0);
    }
  }
  return bad;
}

}  // namespace

TEST_CASE("rgb_to_hsv examples") {
  Hsv red = rgb_to_hsv(Rgb{255, 0, 0});
  CHECK(red.h == 0.0);
  CHECK(red.s == 1.0);
  CHECK(red.v == 1.0);
  Hsv black = rgb_to_hsv(Rgb{0, 0, 0});
  CHECK(black.h == 0.0);
  CHECK(black.s == 0.0);
  CHECK(black.v == 0.0);
  Hsv gray = rgb_to_hsv(Rgb{128, 128, 128});
  CHECK(gray.h == 0.0);
  CHECK(gray.s == 0.0);
  CHECK(gray.v == doctest::Approx(128.0 / 255.0).epsilon(1e-12));
}

TEST_CASE("rgb -> hsv -> rgb round-trips on a 17^3 lattice") {
  for (int r = 0; r <= 256; r += 16) {
    for (int g = 0; g <= 256; g += 16) {
      for (int b = 0; b <= 256; b += 16) {
        const Rgb in{static_cast<std::uint8_t>(std::min(r, 255)), static_cast<std::uint8_t>(std::min(g, 255)),
                     static_cast<std::uint8_t>(std::min(b, 255))};
        const Rgb out = hsv_to_rgb(rgb_to_hsv(in));
        CHECK(std::abs(int(in.r) - int(out.r)) <= 1);
        CHECK(std::abs(int(in.g) - int(out.g)) <= 1);
        CHECK(std::abs(int(in.b) - int(out.b)) <= 1);
      }
    }
  }
}

TEST_CASE("extract_channel examples") {
  const auto sat = extract_channel(rgb_to_hsv(ColorImage(4, 3, Rgb{255, 0, 0})), Channel::kSaturation);
  for (double v : sat.pixels()) CHECK(v == 1.0);
  const auto val = extract_channel(rgb_to_hsv(ColorImage(4, 3, Rgb{0, 0, 0})), Channel::kValue);
  for (double v : val.pixels()) CHECK(v == 0.0);
  HsvImage cyan(1, 1, Hsv{180.0, 0.7, 0.3});
  CHECK(extract_channel(cyan, Channel::kHue)(0, 0) == 0.5);
}

TEST_CASE("adaptive_threshold on uniform images") {
  const auto lo = adaptive_threshold(uniform(9, 9, 0.5), 3, -0.1);
  for (auto v : lo.pixels()) CHECK(v == 1);
  const auto hi = adaptive_threshold(uniform(9, 9, 0.5), 3, 0.1);
  for (auto v : hi.pixels()) CHECK(v == 0);
}

TEST_CASE("adaptive_threshold on a step edge matches the window-mean oracle") {
  GrayImage img(8, 8);
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x) img(x, y) = x < 4 ? 0.2 : 0.8;
  const auto got = adaptive_threshold(img, 3, 0.0);
  CHECK(oracle_disagreements(got, img, 3, 0.0) == 0);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 4; ++x) CHECK(got(x, y) == 0);
    // Column 4 sees the dark side in its window and exceeds the mean.
    CHECK(got(4, y) == 1);
  }
}

TEST_CASE("adaptive_threshold matches the oracle on random images") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    GrayImage img(13, 11);
    for (auto& v : img.pixels()) v = u(rng);
    const int window = 3 + 2 * (t % 5);
    const double offset = (t % 3 - 1) * 0.05;
    CHECK(oracle_disagreements(adaptive_threshold(img, window, offset), img, window, offset) == 0);
  }
}

TEST_CASE("adaptive_threshold inversion symmetry") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> u(0, 255);
  GrayImage img(16, 16), inv(16, 16);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 16; ++x) {
      const int k = u(rng);
      img(x, y) = k / 255.0;
      inv(x, y) = (255 - k) / 255.0;
    }
  }
  const double offset = 0.03;
  const auto a = adaptive_threshold(img, 5, offset);
  const auto b = adaptive_threshold(inv, 5, -offset);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 16; ++x) {
      if (a(x, y) != 1 - b(x, y)) CHECK(std::abs(img(x, y) - threshold_level(img, x, y, 5, offset)) < 1e-9);
    }
  }
}

TEST_CASE("adaptive_threshold rejects bad windows") {
  const auto img = uniform(9, 9, 0.5);
  CHECK_THROWS_AS(adaptive_threshold(img, 4, 0.0), Error);
  CHECK_THROWS_AS(adaptive_threshold(img, 1, 0.0), Error);
  CHECK_THROWS_AS(adaptive_threshold(img, 11, 0.0), Error);
}

TEST_CASE("otsu separates a bimodal image") {
  GrayImage img(10, 10);
  for (int y = 0; y < 10; ++y)
    for (int x = 0; x < 10; ++x) img(x, y) = x < 5 ? 0.1 : 0.9;
  const auto m = otsu_threshold(img);
  for (int y = 0; y < 10; ++y)
    for (int x = 0; x < 10; ++x) CHECK(m(x, y) == (x < 5 ? 0 : 1));
}

TEST_CASE("label_regions examples") {
  CHECK(label_regions(BinaryMask(6, 6)).empty());

  BinaryMask two(6, 6);
  two(0, 0) = 1;
  two(5, 5) = 1;
  CHECK(label_regions(two, Connectivity::kEight).size() == 2);

  BinaryMask ell(8, 8);
  for (int y = 1; y <= 4; ++y) ell(2, y) = 1;
  ell(3, 4) = 1;
  const auto regions = label_regions(ell);
  REQUIRE(regions.size() == 1);
  CHECK(regions[0].pixels.size() == 5);
  CHECK(regions[0].coverage == 5.0 / 64.0);
}

TEST_CASE("label_regions partitions the foreground and agrees with the oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const auto m = oracle::random_mask(rng, 20, 17, 0.45);
    for (bool eight : {false, true}) {
      const auto regions = label_regions(m, eight ? Connectivity::kEight : Connectivity::kFour);
      CHECK(static_cast<int>(regions.size()) == oracle::count_components(m, eight));
      std::set<Pixel> seen;
      std::size_t total = 0;
      for (const auto& r : regions) {
        total += r.pixels.size();
        for (const Pixel& p : r.pixels) {
          CHECK(m[p] == 1);
          seen.insert(p);
        }
      }
      CHECK(total == seen.size());
      CHECK(total == count_foreground(m));
    }
  }
}

TEST_CASE("label_regions is translation invariant") {
  std::mt19937_64 rng(23);
  const auto m = oracle::random_mask(rng, 12, 12, 0.4);
  BinaryMask shifted(17, 15);
  for (int y = 0; y < 12; ++y)
    for (int x = 0; x < 12; ++x) shifted(x + 5, y + 3) = m(x, y);
  const auto a = label_regions(m);
  const auto b = label_regions(shifted);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].pixels.size() == b[i].pixels.size());
    for (std::size_t k = 0; k < a[i].pixels.size(); ++k)
      CHECK(b[i].pixels[k] == Pixel{a[i].pixels[k].x + 5, a[i].pixels[k].y + 3});
  }
}

TEST_CASE("select_roi") {
  std::vector<Region> regions(2);
  regions[0].label = 1;
  regions[0].coverage = 2.7e-3;
  regions[1].label = 2;
  regions[1].coverage = 1.8e-4;
  CHECK(select_roi(regions).label == 1);
  CHECK(select_roi({regions[1]}).label == 2);
  regions[1].coverage = 2.7e-3;
  CHECK(select_roi(regions).label == 1);
  CHECK_THROWS_AS(select_roi({}), Error);
  try {
    select_roi({});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNoRoi);
  }
}

TEST_CASE("normalized_coverage") {
  CHECK(normalized_coverage(BinaryMask(7, 5, 1)) == 1.0);
  BinaryMask m(10, 10);
  for (int i = 0; i < 25; ++i) m(i % 10, i / 10) = 1;
  CHECK(normalized_coverage(m) == 0.25);
  std::mt19937_64 rng(1);
  const auto r = oracle::random_mask(rng, 13, 7, 0.3);
  const double scaled = normalized_coverage(r) * (13 * 7);
  CHECK(scaled == std::round(scaled));
}

TEST_CASE("morphological_close_open examples") {
  CHECK(morphological_close_open(BinaryMask(30, 30), 2) == BinaryMask(30, 30));

  BinaryMask square(40, 40);
  for (int y = 5; y < 25; ++y)
    for (int x = 5; x < 25; ++x) square(x, y) = 1;
  // A radius-2 disk cannot reach the outermost corner pixels, so opening
  // clips three pixels per corner and keeps everything else.
  BinaryMask clipped = square;
  for (auto [cx, cy, sx, sy] : {std::array{5, 5, 1, 1}, {24, 5, -1, 1}, {5, 24, 1, -1}, {24, 24, -1, -1}}) {
    clipped(cx, cy) = 0;
    clipped(cx + sx, cy) = 0;
    clipped(cx, cy + sy) = 0;
  }
  CHECK(morphological_close_open(square, 2) == clipped);
  CHECK(morphological_close_open(clipped, 2) == clipped);

  BinaryMask speck = square;
  speck(34, 15) = 1;
  CHECK(morphological_close_open(speck, 2) == clipped);
}
