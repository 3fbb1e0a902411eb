#include <algorithm>
#include <set>

#include "dropgraph/complexity.hpp"

namespace dropgraph {

namespace {

__extension__ typedef __int128 Wide;

// Twice the signed area of (a, b, c); positive when counter-clockwise with y up.
Wide orient(Pixel a, Pixel b, Pixel c) {
  return static_cast<Wide>(b.x - a.x) * (c.y - a.y) - static_cast<Wide>(b.y - a.y) * (c.x - a.x);
}

// Positive when d lies strictly inside the circle through counter-clockwise a, b, c.
Wide incircle(Pixel a, Pixel b, Pixel c, Pixel d) {
  const Wide adx = a.x - d.x, ady = a.y - d.y;
  const Wide bdx = b.x - d.x, bdy = b.y - d.y;
  const Wide cdx = c.x - d.x, cdy = c.y - d.y;
  const Wide ad = adx * adx + ady * ady;
  const Wide bd = bdx * bdx + bdy * bdy;
  const Wide cd = cdx * cdx + cdy * cdy;
  return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
}

// Counter-clockwise convex polygon order of cocircular ids (monotone chain).
std::vector<int> convex_order(const std::vector<Pixel>& pts, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end(), [&](int i, int j) {
    return pts[i].x != pts[j].x ? pts[i].x < pts[j].x : pts[i].y < pts[j].y;
  });
  std::vector<int> hull(2 * ids.size());
  std::size_t k = 0;
  for (int id : ids) {
    while (k >= 2 && orient(pts[hull[k - 2]], pts[hull[k - 1]], pts[id]) <= 0) --k;
    hull[k++] = id;
  }
  for (std::size_t i = ids.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(pts[hull[k - 2]], pts[hull[k - 1]], pts[ids[i]]) <= 0) --k;
    hull[k++] = ids[i];
  }
  hull.resize(k - 1);
  return hull;
}

Triangle canonical(const std::vector<Pixel>& pts, int a, int b, int c) {
  if (orient(pts[a], pts[b], pts[c]) < 0) std::swap(b, c);
  // Rotate so the smallest id leads, keeping orientation.
  while (a > b || a > c) {
    const int t = a;
    a = b;
    b = c;
    c = t;
  }
  return {a, b, c};
}

}  // namespace

std::size_t Triangulation::edge_count() const {
  std::size_t edges = 0;
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    for (std::size_t j = i + 1; j < adjacency.size(); ++j) edges += adjacency[i][j];
  }
  return edges;
}

Triangulation delaunay(const std::vector<Pixel>& points) {
  {
    std::vector<Pixel> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::kDuplicatePoints, "triangulation input has duplicate points");
    }
  }
  const int n = static_cast<int>(points.size());
  Triangulation t;
  t.vertices = points;
  t.adjacency.assign(points.size(), std::vector<std::uint8_t>(points.size(), 0));
  auto link = [&](int i, int j) { t.adjacency[i][j] = t.adjacency[j][i] = 1; };

  bool collinear = true;
  for (int k = 2; k < n && collinear; ++k) collinear = orient(points[0], points[1], points[k]) == 0;
  if (n < 3 || collinear) {
    t.degenerate = true;
    std::vector<int> order(points.size());
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      return points[i].x != points[j].x ? points[i].x < points[j].x : points[i].y < points[j].y;
    });
    for (int i = 1; i < n; ++i) link(order[i - 1], order[i]);
    return t;
  }

  // Every empty circle through three points spans one Delaunay face; the
  // face is every input point on that circle.
  std::set<std::vector<int>> faces;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        int a = i, b = j, c = k;
        const Wide o = orient(points[a], points[b], points[c]);
        if (o == 0) continue;
        if (o < 0) std::swap(b, c);
        std::vector<int> face{i, j, k};
        bool empty = true;
        for (int l = 0; l < n && empty; ++l) {
          if (l == i || l == j || l == k) continue;
          const Wide in = incircle(points[a], points[b], points[c], points[l]);
          if (in > 0) empty = false;
          if (in == 0) face.push_back(l);
        }
        if (!empty) continue;
        std::sort(face.begin(), face.end());
        faces.insert(std::move(face));
      }
    }
  }

  for (const auto& face : faces) {
    if (face.size() == 3) {
      t.triangles.push_back(canonical(points, face[0], face[1], face[2]));
      continue;
    }
    // Cocircular group: fan from the lowest id.
    std::vector<int> ring = convex_order(points, face);
    const auto lowest = std::min_element(ring.begin(), ring.end());
    std::rotate(ring.begin(), lowest, ring.end());
    for (std::size_t m = 1; m + 1 < ring.size(); ++m) {
      t.triangles.push_back(canonical(points, ring[0], ring[m], ring[m + 1]));
    }
  }
  std::sort(t.triangles.begin(), t.triangles.end(), [](const Triangle& x, const Triangle& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });
  for (const Triangle& tri : t.triangles) {
    link(tri.a, tri.b);
    link(tri.b, tri.c);
    link(tri.a, tri.c);
  }
  return t;
}

}  // namespace dropgraph
