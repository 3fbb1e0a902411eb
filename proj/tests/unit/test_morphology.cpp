#include <doctest.h>

#include <random>

#include "dropgraph/morphology.hpp"
#include "dropgraph/segmentation.hpp"
#include "oracles.hpp"

using namespace dropgraph;

namespace {

BinaryMask dilate_oracle(const BinaryMask& m, int r) {
  BinaryMask out(m.width(), m.height());
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x)
      for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx)
          if (dx * dx + dy * dy <= r * r && m.at_or(x - dx, y - dy, 0)) out(x, y) = 1;
  return out;
}

BinaryMask erode_oracle(const BinaryMask& m, int r, std::uint8_t outside) {
  BinaryMask out(m.width(), m.height());
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      bool all = true;
      for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx)
          if (dx * dx + dy * dy <= r * r && !m.at_or(x + dx, y + dy, outside)) all = false;
      out(x, y) = all ? 1 : 0;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("structuring element offsets") {
  CHECK(StructuringElement(0).offsets().size() == 1);
  CHECK(StructuringElement(1).offsets().size() == 5);
  CHECK(StructuringElement(2).offsets().size() == 13);
  // Lattice points in a radius-4 disk.
  CHECK(StructuringElement(4).offsets().size() == 49);
  const StructuringElement three(3);
  for (const Pixel& o : three.offsets()) CHECK(o.x * o.x + o.y * o.y <= 9);
  CHECK(StructuringElement().radius() == 4);
}

TEST_CASE("dilate and erode match direct evaluation") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto m = oracle::random_mask(rng, 19, 14, 0.3 + 0.02 * t);
    const int r = t % 4;
    const StructuringElement se(r);
    CHECK(dilate(m, se) == dilate_oracle(m, r));
    CHECK(erode(m, se, OutsideIs::kForeground) == erode_oracle(m, r, 1));
    CHECK(erode(m, se, OutsideIs::kBackground) == erode_oracle(m, r, 0));
  }
}

TEST_CASE("closing and opening are idempotent and ordered") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 15; ++t) {
    const auto m = oracle::random_blobs(rng, 32, 32, 5);
    const StructuringElement se(1 + t % 3);
    const auto c = close(m, se);
    const auto o = open(m, se);
    CHECK(close(c, se) == c);
    CHECK(open(o, se) == o);
    for (int y = 0; y < 32; ++y) {
      for (int x = 0; x < 32; ++x) {
        CHECK(o(x, y) <= m(x, y));
        CHECK(m(x, y) <= c(x, y));
      }
    }
  }
}

TEST_CASE("close_open is close then open") {
  std::mt19937_64 rng(11);
  const auto m = oracle::random_mask(rng, 24, 24, 0.5);
  const StructuringElement se(2);
  CHECK(morphological_close_open(m, 2) == open(close(m, se), se));
}
