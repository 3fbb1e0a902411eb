#include <doctest.h>

#include <random>
#include <set>

#include "dropgraph/complexity.hpp"
#include "dropgraph/error.hpp"
#include "oracles.hpp"

using namespace dropgraph;

namespace {

std::vector<Pixel> random_points(std::mt19937_64& rng, int n, int span) {
  std::uniform_int_distribution<int> c(0, span);
  std::set<Pixel> seen;
  std::vector<Pixel> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Pixel p{c(rng), c(rng)};
    if (seen.insert(p).second) pts.push_back(p);
  }
  return pts;
}

long long cross(Pixel o, Pixel a, Pixel b) {
  return static_cast<long long>(a.x - o.x) * (b.y - o.y) - static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

// Triangles of a triangulation of points in general position: 2n - 2 - h.
int hull_size(std::vector<Pixel> pts) {
  std::sort(pts.begin(), pts.end(), [](Pixel a, Pixel b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  std::vector<Pixel> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (const Pixel& p : pts) {
      while (hull.size() >= base + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  return static_cast<int>(hull.size());
}

void check_valid(const Triangulation& t) {
  const auto& v = t.vertices;
  for (const auto& tri : t.triangles) {
    CHECK(tri.a < tri.b);
    CHECK(tri.a < tri.c);
    CHECK(cross(v[tri.a], v[tri.b], v[tri.c]) != 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (static_cast<int>(k) == tri.a || static_cast<int>(k) == tri.b || static_cast<int>(k) == tri.c) continue;
      CHECK(oracle::in_circle(v[tri.a], v[tri.b], v[tri.c], v[k]) <= 0);
    }
    CHECK(t.adjacency[tri.a][tri.b] == 1);
    CHECK(t.adjacency[tri.b][tri.c] == 1);
    CHECK(t.adjacency[tri.c][tri.a] == 1);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(t.adjacency[i][i] == 0);
    for (std::size_t j = 0; j < v.size(); ++j) CHECK(t.adjacency[i][j] == t.adjacency[j][i]);
  }
}

}  // namespace

TEST_CASE("in_circle oracle sanity") {
  CHECK(oracle::in_circle({0, 0}, {2, 0}, {0, 2}, {1, 1}) == 1);
  CHECK(oracle::in_circle({0, 0}, {0, 2}, {2, 0}, {1, 1}) == 1);
  CHECK(oracle::in_circle({0, 0}, {2, 0}, {0, 2}, {2, 2}) == 0);
  CHECK(oracle::in_circle({0, 0}, {2, 0}, {0, 2}, {5, 5}) == -1);
}

TEST_CASE("three points give one triangle") {
  const auto t = delaunay({{0, 0}, {5, 1}, {2, 6}});
  REQUIRE(t.triangles.size() == 1);
  CHECK_FALSE(t.degenerate);
  CHECK(t.edge_count() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(t.adjacency[i][j] == (i != j ? 1 : 0));
  CHECK(adjacency_entropy(t) == doctest::Approx(0.9183).epsilon(1e-4));
}

TEST_CASE("a non-square rectangle splits along the shorter diagonal") {
  // A rectangle's diagonals are equal, so the four corners are cocircular and
  // the lowest-id fan decides; check both labelings.
  const auto t = delaunay({{0, 0}, {6, 0}, {6, 3}, {0, 3}});
  CHECK(t.triangles.size() == 2);
  CHECK(t.edge_count() == 5);
  CHECK(t.adjacency[0][2] == 1);
  CHECK(t.adjacency[1][3] == 0);
  check_valid(t);

  // A slightly skewed quadrilateral has a unique, shorter Delaunay diagonal.
  const auto k = delaunay({{0, 0}, {6, 0}, {7, 3}, {0, 3}});
  CHECK(k.triangles.size() == 2);
  check_valid(k);
}

TEST_CASE("random point sets satisfy the empty-circle property") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 10;
    const auto pts = random_points(rng, n, trial % 2 ? 8 : 200);
    const auto t = delaunay(pts);
    if (t.degenerate) {
      CHECK(t.triangles.empty());
      continue;
    }
    check_valid(t);
    // Every edge is shared by at most two triangles; counts match Euler.
    const int h = hull_size(pts);
    CHECK(t.edge_count() <= static_cast<std::size_t>(3 * n - 3 - h));
    CHECK(t.triangles.size() <= static_cast<std::size_t>(2 * n - 2 - h));
  }
}

TEST_CASE("grid points are cocircular but still triangulate fully") {
  std::vector<Pixel> grid;
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 4; ++x) grid.push_back({x * 2, y * 2});
  const auto t = delaunay(grid);
  CHECK(t.triangles.size() == 12);
  check_valid(t);
}

TEST_CASE("degenerate inputs use chain adjacency") {
  const auto line = delaunay({{0, 0}, {4, 4}, {2, 2}, {6, 6}});
  CHECK(line.degenerate);
  CHECK(line.triangles.empty());
  CHECK(line.edge_count() == 3);
  CHECK(line.adjacency[0][2] == 1);
  CHECK(line.adjacency[2][1] == 1);
  CHECK(line.adjacency[1][3] == 1);
  CHECK(line.adjacency[0][1] == 0);

  const auto two = delaunay({{0, 0}, {3, 0}});
  CHECK(two.degenerate);
  CHECK(adjacency_entropy(two) == 1.0);
  const auto one = delaunay({{3, 3}});
  CHECK(adjacency_entropy(one) == 0.0);

  CHECK_THROWS_AS(delaunay({{1, 1}, {2, 2}, {1, 1}}), Error);
}
