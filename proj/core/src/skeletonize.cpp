#include "dropgraph/skeletonize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

#include "topology.hpp"

namespace dropgraph {

const char* to_string(PointKind kind) {
  switch (kind) {
    case PointKind::kEndpoint: return "endpoint";
    case PointKind::kJunction: return "junction";
    case PointKind::kIsolated: return "isolated";
  }
  return "unknown";
}

double BoundarySet::total_length() const {
  double total = 0.0;
  for (const Contour& c : contours) total += c.length;
  return total;
}

BinaryMask clear_border_minima(const BinaryMask& mask, const StructuringElement& se) {
  const int w = mask.width();
  const int h = mask.height();
  Raster<std::uint8_t> reached(w, h);
  std::deque<Pixel> queue;
  auto seed = [&](int x, int y) {
    if (!mask(x, y) && !reached(x, y)) {
      reached(x, y) = 1;
      queue.push_back({x, y});
    }
  };
  for (int x = 0; x < w; ++x) {
    seed(x, 0);
    seed(x, h - 1);
  }
  for (int y = 0; y < h; ++y) {
    seed(0, y);
    seed(w - 1, y);
  }
  // X_k = dilate(X_{k-1}, se) restricted to the background, to a fixpoint.
  while (!queue.empty()) {
    const Pixel p = queue.front();
    queue.pop_front();
    for (const Pixel& o : se.offsets()) {
      const Pixel q{p.x + o.x, p.y + o.y};
      if (mask.contains(q) && !mask[q] && !reached[q]) {
        reached[q] = 1;
        queue.push_back(q);
      }
    }
  }
  BinaryMask out(w, h);
  auto m = mask.pixels();
  auto r = reached.pixels();
  auto o = out.pixels();
  for (std::size_t i = 0; i < m.size(); ++i) o[i] = (m[i] || !r[i]) ? 1 : 0;
  return out;
}

namespace {

// Crack-following directions: N, E, S, W. Travel is the clockwise turn of the
// outward normal, so foreground stays on the right-hand side.
constexpr std::array<Pixel, 4> kNormals = {Pixel{0, -1}, Pixel{1, 0}, Pixel{0, 1}, Pixel{-1, 0}};

std::vector<Contour> trace_contours(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  Raster<std::uint8_t> cracks(w, h);  // bit n set once crack (p, n) is traced
  auto fg = [&](Pixel q) { return mask.at_or(q.x, q.y, 0) != 0; };

  std::vector<Contour> contours;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask(x, y)) continue;
      for (int n0 = 0; n0 < 4; ++n0) {
        const Pixel p0{x, y};
        if (fg({x + kNormals[n0].x, y + kNormals[n0].y})) continue;
        if (cracks(x, y) & (1 << n0)) continue;

        Contour contour;
        Pixel p = p0;
        int n = n0;
        do {
          cracks[p] |= static_cast<std::uint8_t>(1 << n);
          if (contour.walk.empty() || !(contour.walk.back() == p)) contour.walk.push_back(p);
          const int t = (n + 1) % 4;
          const Pixel ahead{p.x + kNormals[t].x, p.y + kNormals[t].y};
          const Pixel diagonal{ahead.x + kNormals[n].x, ahead.y + kNormals[n].y};
          if (fg(diagonal)) {
            p = diagonal;
            n = (t + 2) % 4;
          } else if (fg(ahead)) {
            p = ahead;
          } else {
            n = t;
          }
        } while (!(p == p0 && n == n0));
        if (contour.walk.size() > 1 && contour.walk.back() == contour.walk.front()) {
          contour.walk.pop_back();
        }

        contour.arc.resize(contour.walk.size());
        double s = 0.0;
        for (std::size_t i = 0; i < contour.walk.size(); ++i) {
          if (i > 0) s += detail::step_length(contour.walk[i - 1], contour.walk[i]);
          contour.arc[i] = s;
        }
        contour.length =
            contour.walk.size() > 1 ? s + detail::step_length(contour.walk.back(), contour.walk.front())
                                    : 0.0;
        contours.push_back(std::move(contour));
      }
    }
  }
  return contours;
}

}  // namespace

BoundarySet boundary(const BinaryMask& mask, const StructuringElement& se) {
  BoundarySet out;
  const BinaryMask eroded = erode(mask, se, OutsideIs::kBackground);
  out.ring = BinaryMask(mask.width(), mask.height());
  auto m = mask.pixels();
  auto e = eroded.pixels();
  auto r = out.ring.pixels();
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = (m[i] && !e[i]) ? 1 : 0;

  out.contours = trace_contours(mask);
  out.contour_of = Raster<std::int32_t>(mask.width(), mask.height(), -1);
  for (std::size_t c = 0; c < out.contours.size(); ++c) {
    for (const Pixel& p : out.contours[c].walk) {
      if (out.contour_of[p] < 0) out.contour_of[p] = static_cast<std::int32_t>(c);
    }
  }
  return out;
}

DistanceField distance_transform(const BinaryMask& mask, const BoundarySet& boundary) {
  const BinaryMask& ring = boundary.ring;
  const int w = ring.width();
  const int h = ring.height();
  if (w != mask.width() || h != mask.height()) {
    throw Error(ErrorKind::kParameter, "mask and boundary dimensions differ");
  }
  if (count_foreground(ring) == 0) throw Error(ErrorKind::kEmptyBoundary, "boundary is empty");

  // Column pass: vertical distance to the nearest ring pixel in each column.
  constexpr std::int64_t kNone = -1;
  Raster<std::int64_t> g(w, h, kNone);
  Raster<std::int32_t> g_row(w, h, -1);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      if (ring(x, y)) {
        g(x, y) = 0;
        g_row(x, y) = y;
      } else if (y > 0 && g(x, y - 1) != kNone) {
        g(x, y) = g(x, y - 1) + 1;
        g_row(x, y) = g_row(x, y - 1);
      }
    }
    for (int y = h - 2; y >= 0; --y) {
      if (g(x, y + 1) != kNone && (g(x, y) == kNone || g(x, y + 1) + 1 < g(x, y))) {
        g(x, y) = g(x, y + 1) + 1;
        g_row(x, y) = g_row(x, y + 1);
      }
    }
  }

  DistanceField dt;
  dt.squared = Raster<std::int64_t>(w, h);
  dt.distance = Raster<double>(w, h);
  dt.nearest = Raster<Pixel>(w, h);

  // Row pass: lower envelope of parabolas (x - u)^2 + g(u)^2 over columns u
  // that hold a ring pixel. Breakpoints are kept as exact fractions.
  std::vector<int> hull;
  std::vector<std::int64_t> start_num;
  std::vector<std::int64_t> start_den;
  hull.reserve(w);
  for (int y = 0; y < h; ++y) {
    hull.clear();
    start_num.clear();
    start_den.clear();
    auto height = [&](int u) { return g(u, y) * g(u, y) + static_cast<std::int64_t>(u) * u; };
    for (int u = 0; u < w; ++u) {
      if (g(u, y) == kNone) continue;
      while (!hull.empty()) {
        const int v = hull.back();
        // Intersection of parabolas v and u: s = (H(u) - H(v)) / (2 (u - v)).
        const std::int64_t num = height(u) - height(v);
        const std::int64_t den = 2 * static_cast<std::int64_t>(u - v);
        if (hull.size() > 1 && num * start_den.back() <= start_num.back() * den) {
          hull.pop_back();
          start_num.pop_back();
          start_den.pop_back();
          continue;
        }
        start_num.push_back(num);
        start_den.push_back(den);
        break;
      }
      if (hull.empty()) {
        start_num.push_back(std::numeric_limits<std::int32_t>::min());
        start_den.push_back(1);
      }
      hull.push_back(u);
    }
    // start_num/den[k] is where parabola hull[k] takes over (k >= 1).
    std::size_t k = 0;
    for (int x = 0; x < w; ++x) {
      while (k + 1 < hull.size() && start_num[k + 1] <= static_cast<std::int64_t>(x) * start_den[k + 1]) {
        ++k;
      }
      const int u = hull[k];
      const std::int64_t dx = x - u;
      const std::int64_t sq = dx * dx + g(u, y) * g(u, y);
      dt.squared(x, y) = sq;
      dt.distance(x, y) = std::sqrt(static_cast<double>(sq));
      dt.nearest(x, y) = {u, g_row(u, y)};
    }
  }
  return dt;
}

namespace {

// Arc position of every contour pixel (first visit after the seam at walk
// index `seam[c]` of contour c).
Raster<double> arc_positions(const BoundarySet& boundary, const std::vector<std::size_t>& seam,
                             Raster<std::int32_t>* contour_of) {
  const int w = boundary.ring.width();
  const int h = boundary.ring.height();
  Raster<double> arc(w, h, -1.0);
  Raster<std::int32_t> owner(w, h, -1);
  for (std::size_t c = 0; c < boundary.contours.size(); ++c) {
    const Contour& contour = boundary.contours[c];
    const std::size_t n = contour.walk.size();
    const double base = contour.arc[seam[c]];
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t idx = (seam[c] + i) % n;
      const Pixel p = contour.walk[idx];
      if (owner[p] >= 0) continue;
      double s = contour.arc[idx] - base;
      if (s < 0.0) s += contour.length;
      arc[p] = s;
      owner[p] = static_cast<std::int32_t>(c);
    }
  }
  if (contour_of) *contour_of = std::move(owner);
  return arc;
}

}  // namespace

GeodesicField geodesic_field(const BoundarySet& boundary, Pixel start) {
  std::vector<std::size_t> seam(boundary.contours.size(), 0);
  int start_contour = -1;
  for (std::size_t c = 0; c < boundary.contours.size() && start_contour < 0; ++c) {
    const auto& walk = boundary.contours[c].walk;
    const auto it = std::find(walk.begin(), walk.end(), start);
    if (it != walk.end()) {
      start_contour = static_cast<int>(c);
      seam[c] = static_cast<std::size_t>(it - walk.begin());
    }
  }
  if (start_contour < 0) throw Error(ErrorKind::kNotOnBoundary, "start point is not on the boundary");

  // Measure the start contour first so shared pixels take its arc values.
  BoundarySet ordered = boundary;
  std::swap(ordered.contours[0], ordered.contours[start_contour]);
  std::swap(seam[0], seam[start_contour]);

  GeodesicField field;
  field.start = start;
  Raster<std::int32_t> owner;
  field.arc = arc_positions(ordered, seam, &owner);
  for (auto& id : owner.pixels()) {
    if (id == 0) {
      id = start_contour;
    } else if (id == start_contour) {
      id = 0;
    }
  }
  field.contour_of = std::move(owner);
  return field;
}

Raster<double> boundary_support(const BinaryMask& mask, const BoundarySet& boundary,
                                const DistanceField& dt) {
  const int w = mask.width();
  const int h = mask.height();

  // Two parametrisations per contour: seams at the walk start and half way
  // round. A jump that straddles one seam is measured correctly by the other.
  std::vector<std::size_t> seam_a(boundary.contours.size(), 0);
  std::vector<std::size_t> seam_b(boundary.contours.size(), 0);
  for (std::size_t c = 0; c < boundary.contours.size(); ++c) {
    const Contour& contour = boundary.contours[c];
    const auto it = std::lower_bound(contour.arc.begin(), contour.arc.end(), contour.length / 2.0);
    seam_b[c] = it == contour.arc.end() ? 0 : static_cast<std::size_t>(it - contour.arc.begin());
  }
  Raster<std::int32_t> owner;
  const Raster<double> u1 = arc_positions(boundary, seam_a, &owner);
  const Raster<double> u2 = arc_positions(boundary, seam_b, nullptr);

  const double unbounded = boundary.total_length() + 1.0;
  Raster<double> support(w, h, 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask(x, y)) continue;
      const Pixel gp = dt.nearest(x, y);
      const int cp = owner[gp];
      double jump1 = 0.0;
      double jump2 = 0.0;
      for (const Pixel step : {Pixel{1, 0}, Pixel{0, 1}}) {
        const Pixel q{x + step.x, y + step.y};
        if (!mask.contains(q) || !mask[q]) continue;
        const Pixel gq = dt.nearest[q];
        const int cq = owner[gq];
        if (cp < 0 || cq < 0) continue;
        if (cp != cq) {
          jump1 = jump2 = unbounded;
          continue;
        }
        jump1 = std::max(jump1, std::abs(u1[gq] - u1[gp]));
        jump2 = std::max(jump2, std::abs(u2[gq] - u2[gp]));
      }
      support(x, y) = std::min(jump1, jump2);
    }
  }
  return support;
}

namespace {

// Removes every simple pixel outside `anchors`, lowest distance first, until
// none is left. Homotopy of the mask is preserved.
void anchored_thinning(BinaryMask& skel, const BinaryMask& anchors, const DistanceField& dt) {
  using Key = std::tuple<std::int64_t, int, int>;  // squared distance, y, x
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  for (int y = 0; y < skel.height(); ++y) {
    for (int x = 0; x < skel.width(); ++x) {
      if (skel(x, y) && !anchors(x, y)) queue.emplace(dt.squared(x, y), y, x);
    }
  }
  while (!queue.empty()) {
    const auto [sq, y, x] = queue.top();
    queue.pop();
    if (!skel(x, y)) continue;
    if (!detail::is_simple(detail::neighbourhood(skel, x, y))) continue;
    skel(x, y) = 0;
    for (const Pixel& o : detail::kRing) {
      const int nx = x + o.x;
      const int ny = y + o.y;
      if (skel.contains(nx, ny) && skel(nx, ny) && !anchors(nx, ny)) {
        queue.emplace(dt.squared(nx, ny), ny, nx);
      }
    }
  }
}

// Drops end branches that stay inside the inscribed disk of their junction.
// Each junction keeps at least two branches.
bool prune_ligatures(BinaryMask& skel, const DistanceField& dt) {
  const detail::SkeletonTrace trace = detail::trace_branches(skel, detail::derive_nodes(skel));
  std::vector<int> deg(trace.nodes.size(), 0);
  for (const auto& b : trace.branches) {
    ++deg[b.a];
    ++deg[b.b];
  }
  std::map<int, std::vector<std::pair<double, std::size_t>>> spurs;  // junction -> (length, branch)
  for (std::size_t i = 0; i < trace.branches.size(); ++i) {
    const auto& b = trace.branches[i];
    const auto& na = trace.nodes[b.a];
    const auto& nb = trace.nodes[b.b];
    int junction = -1;
    if (na.kind == PointKind::kEndpoint && nb.kind == PointKind::kJunction) junction = b.b;
    if (nb.kind == PointKind::kEndpoint && na.kind == PointKind::kJunction) junction = b.a;
    if (junction < 0 || deg[junction] < 3) continue;
    if (b.length < dt.distance[trace.nodes[junction].rep]) spurs[junction].emplace_back(b.length, i);
  }
  bool changed = false;
  for (auto& [junction, list] : spurs) {
    std::sort(list.begin(), list.end());
    const std::size_t removable = static_cast<std::size_t>(deg[junction] - 2);
    for (std::size_t k = 0; k < std::min(removable, list.size()); ++k) {
      const auto& b = trace.branches[list[k].second];
      const int end = trace.nodes[b.a].kind == PointKind::kEndpoint ? b.a : b.b;
      for (const Pixel& p : b.path) skel[p] = 0;
      skel[trace.nodes[end].rep] = 0;
      changed = true;
    }
  }
  return changed;
}

// Deepest pixel within the inscribed disk around `from`.
Pixel inscribed_centre(const DistanceField& dt, Pixel from) {
  const double depth = dt.distance[from];
  const int reach = static_cast<int>(std::ceil(depth));
  Pixel centre = from;
  for (int dy = -reach; dy <= reach; ++dy) {
    for (int dx = -reach; dx <= reach; ++dx) {
      const Pixel q{from.x + dx, from.y + dy};
      if (!dt.distance.contains(q) || dx * dx + dy * dy > depth * depth) continue;
      if (dt.distance[q] > dt.distance[centre] || (dt.distance[q] == dt.distance[centre] && q < centre)) centre = q;
    }
  }
  return centre;
}

// A branch-free path whose ends lie within its own inscribed radius is the
// centre of a blob, not an arm: keep one pixel at the blob centre. Isolated
// pixels are moved to the centre the same way.
void collapse_blob_paths(BinaryMask& skel, const DistanceField& dt) {
  const detail::SkeletonTrace trace = detail::trace_branches(skel, detail::derive_nodes(skel));
  std::vector<Pixel> keep;
  for (const auto& n : trace.nodes) {
    if (n.kind != PointKind::kIsolated || n.members.size() != 1) continue;
    skel[n.rep] = 0;
    keep.push_back(inscribed_centre(dt, n.rep));
  }
  for (const auto& b : trace.branches) {
    const auto& na = trace.nodes[b.a];
    const auto& nb = trace.nodes[b.b];
    if (na.kind != PointKind::kEndpoint || nb.kind != PointKind::kEndpoint) continue;
    std::vector<Pixel> pixels = b.path;
    pixels.push_back(na.rep);
    pixels.push_back(nb.rep);
    Pixel deepest = pixels.front();
    for (const Pixel& p : pixels) {
      if (dt.distance[p] > dt.distance[deepest] || (dt.distance[p] == dt.distance[deepest] && p < deepest)) {
        deepest = p;
      }
    }
    const double chord = std::hypot(na.rep.x - nb.rep.x, na.rep.y - nb.rep.y);
    if (chord >= dt.distance[deepest]) continue;
    for (const Pixel& p : pixels) skel[p] = 0;
    keep.push_back(inscribed_centre(dt, deepest));
  }
  for (const Pixel& p : keep) skel[p] = 1;
}

}  // namespace

Skeleton skeleton_from_support(const BinaryMask& mask, const BoundarySet& boundary,
                               const DistanceField& dt, double tau) {
  if (tau < 0.0) throw Error(ErrorKind::kParameter, "tau must be >= 0");
  const int w = mask.width();
  const int h = mask.height();
  Skeleton skel;
  skel.pixels = BinaryMask(w, h);
  skel.radius = dt.distance;
  skel.support = boundary_support(mask, boundary, dt);
  if (tau >= boundary.total_length()) {
    skel.tau_exceeds_boundary = true;
    return skel;
  }

  BinaryMask anchors(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) anchors(x, y) = (mask(x, y) && skel.support(x, y) > tau) ? 1 : 0;
  }

  skel.pixels = mask;
  anchored_thinning(skel.pixels, anchors, dt);
  detail::thin_to_unit_width(skel.pixels);
  for (int round = 0; round < 64 && prune_ligatures(skel.pixels, dt); ++round) {
    detail::thin_to_unit_width(skel.pixels);
  }
  collapse_blob_paths(skel.pixels, dt);
  return skel;
}

CriticalPointSet critical_points(const Skeleton& skel) {
  const BinaryMask& pixels = skel.pixels;
  detail::SkeletonTrace trace = detail::trace_branches(pixels, detail::derive_nodes(pixels));
  auto radius_at = [&](Pixel p) {
    return skel.radius.contains(p) ? skel.radius[p] : 0.0;
  };

  // Junctions joined by a branch no longer than the larger inscribed diameter
  // are one branching site.
  const std::size_t count = trace.nodes.size();
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::vector<bool> internal(trace.branches.size(), false);
  for (std::size_t i = 0; i < trace.branches.size(); ++i) {
    const auto& b = trace.branches[i];
    const auto& na = trace.nodes[b.a];
    const auto& nb = trace.nodes[b.b];
    if (na.kind != PointKind::kJunction || nb.kind != PointKind::kJunction) continue;
    if (b.length <= 2.0 * std::max(radius_at(na.rep), radius_at(nb.rep))) {
      parent[find(b.a)] = find(b.b);
      internal[i] = true;
    }
  }

  std::map<std::size_t, CriticalPoint> merged;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& node = trace.nodes[i];
    auto [it, inserted] = merged.try_emplace(find(i));
    CriticalPoint& cp = it->second;
    const bool better = inserted || radius_at(node.rep) > radius_at(cp.at) ||
                        (radius_at(node.rep) == radius_at(cp.at) && node.rep < cp.at);
    if (better) {
      cp.at = node.rep;
      cp.kind = node.kind;
    }
    cp.cluster.insert(cp.cluster.end(), node.members.begin(), node.members.end());
  }
  for (std::size_t i = 0; i < trace.branches.size(); ++i) {
    const auto& b = trace.branches[i];
    const std::size_t ra = find(b.a);
    const std::size_t rb = find(b.b);
    if (internal[i] || ra == rb) {
      auto& cluster = merged[ra].cluster;
      cluster.insert(cluster.end(), b.path.begin(), b.path.end());
      continue;
    }
    ++merged[ra].degree;
    ++merged[rb].degree;
  }

  CriticalPointSet out;
  out.reserve(merged.size());
  for (auto& [root, cp] : merged) {
    std::sort(cp.cluster.begin(), cp.cluster.end());
    cp.cluster.erase(std::unique(cp.cluster.begin(), cp.cluster.end()), cp.cluster.end());
    out.push_back(std::move(cp));
  }
  std::sort(out.begin(), out.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return a.at < b.at; });
  return out;
}

namespace {

// Counter-clockwise quarter turn, the inverse of rotate90.
template <typename T>
Raster<T> rotate_ccw(const Raster<T>& r) {
  Raster<T> out(r.height(), r.width());
  for (int y = 0; y < r.height(); ++y) {
    for (int x = 0; x < r.width(); ++x) out(y, r.width() - 1 - x) = r(x, y);
  }
  return out;
}

Pixel rotate_ccw(Pixel p, int width) { return {p.y, width - 1 - p.x}; }

bool mask_less(const BinaryMask& a, const BinaryMask& b) {
  if (a.width() != b.width()) return a.width() < b.width();
  if (a.height() != b.height()) return a.height() < b.height();
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

}  // namespace

SkeletonResult skeletonize(const BinaryMask& mask, const SkeletonParams& params) {
  SkeletonResult result;
  result.cleaned = clear_border_minima(mask, StructuringElement(params.se_radius));
  // Arc-length support needs a one-pixel contour, so the boundary ring uses
  // the unit disk regardless of the hole-clearing radius.
  result.boundary = boundary(result.cleaned, StructuringElement(1));
  if (result.boundary.empty()) {
    result.skeleton.pixels = BinaryMask(mask.width(), mask.height());
    result.skeleton.support = Raster<double>(mask.width(), mask.height());
    result.skeleton.radius = Raster<double>(mask.width(), mask.height());
    return result;
  }
  result.dt = distance_transform(result.cleaned, result.boundary);

  // Thinning breaks ties in raster order. Running it on the least of the four
  // quarter turns and turning back makes the output rotation-equivariant.
  int turns = 0;
  BinaryMask canonical = result.cleaned;
  BinaryMask turned = result.cleaned;
  for (int k = 1; k < 4; ++k) {
    turned = rotate90(turned);
    if (mask_less(turned, canonical)) {
      canonical = turned;
      turns = k;
    }
  }
  if (turns == 0) {
    result.skeleton = skeleton_from_support(result.cleaned, result.boundary, result.dt, params.tau);
    result.critical = critical_points(result.skeleton);
    return result;
  }

  const BoundarySet cb = boundary(canonical, StructuringElement(1));
  const DistanceField cdt = distance_transform(canonical, cb);
  Skeleton skel = skeleton_from_support(canonical, cb, cdt, params.tau);
  CriticalPointSet critical = critical_points(skel);
  for (int k = 0; k < turns; ++k) {
    const int width = skel.pixels.width();
    skel.pixels = rotate_ccw(skel.pixels);
    skel.support = rotate_ccw(skel.support);
    skel.radius = rotate_ccw(skel.radius);
    for (auto& cp : critical) {
      cp.at = rotate_ccw(cp.at, width);
      for (auto& p : cp.cluster) p = rotate_ccw(p, width);
    }
  }
  for (auto& cp : critical) std::sort(cp.cluster.begin(), cp.cluster.end());
  std::sort(critical.begin(), critical.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return a.at < b.at; });
  result.skeleton = std::move(skel);
  result.critical = std::move(critical);
  return result;
}

}  // namespace dropgraph
