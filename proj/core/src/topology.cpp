#include "topology.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>

namespace dropgraph::detail {

namespace {

struct SimpleTable {
  std::array<bool, 256> simple{};

  SimpleTable() {
    for (int bits = 0; bits < 256; ++bits) simple[bits] = compute(bits);
  }

  static int find(std::array<int, 8>& parent, int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }

  // Components among ring cells of one colour; `eight` selects 8- or
  // 4-adjacency between cells.
  static std::array<int, 8> components(int bits, bool colour, bool eight) {
    std::array<int, 8> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < 8; ++i) {
      if (((bits >> i) & 1) != static_cast<int>(colour)) continue;
      for (int j = i + 1; j < 8; ++j) {
        if (((bits >> j) & 1) != static_cast<int>(colour)) continue;
        const int dx = std::abs(kRing[i].x - kRing[j].x);
        const int dy = std::abs(kRing[i].y - kRing[j].y);
        const bool adjacent = eight ? (dx <= 1 && dy <= 1) : (dx + dy == 1);
        if (adjacent) parent[find(parent, i)] = find(parent, j);
      }
    }
    for (int i = 0; i < 8; ++i) parent[i] = find(parent, i);
    return parent;
  }

  static bool compute(int bits) {
    const auto fg = components(bits, true, true);
    int fg_count = 0;
    std::array<bool, 8> seen{};
    for (int i = 0; i < 8; ++i) {
      if (((bits >> i) & 1) && !seen[fg[i]]) {
        seen[fg[i]] = true;
        ++fg_count;
      }
    }
    // Background components that touch one of the 4-neighbours of the pixel.
    const auto bg = components(bits, false, false);
    int bg_count = 0;
    seen = {};
    for (int i = 0; i < 8; i += 2) {
      if (!((bits >> i) & 1) && !seen[bg[i]]) {
        seen[bg[i]] = true;
        ++bg_count;
      }
    }
    return fg_count == 1 && bg_count == 1;
  }
};

const SimpleTable& simple_table() {
  static const SimpleTable table;
  return table;
}

}  // namespace

int neighbourhood(const BinaryMask& mask, int x, int y) {
  int bits = 0;
  for (int k = 0; k < 8; ++k) {
    if (mask.at_or(x + kRing[k].x, y + kRing[k].y, 0)) bits |= 1 << k;
  }
  return bits;
}

bool is_simple(int neighbourhood_bits) { return simple_table().simple[neighbourhood_bits & 0xff]; }

int degree(const BinaryMask& mask, int x, int y) {
  return std::popcount(static_cast<unsigned>(neighbourhood(mask, x, y)));
}

double step_length(Pixel a, Pixel b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

std::vector<TraceNode> derive_nodes(const BinaryMask& skel) {
  const int w = skel.width();
  const int h = skel.height();
  std::vector<TraceNode> nodes;
  Raster<std::uint8_t> branchy(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!skel(x, y)) continue;
      const int deg = degree(skel, x, y);
      if (deg == 0) {
        nodes.push_back({{x, y}, PointKind::kIsolated, {{x, y}}, false});
      } else if (deg == 1) {
        nodes.push_back({{x, y}, PointKind::kEndpoint, {{x, y}}, false});
      } else if (deg >= 3) {
        branchy(x, y) = 1;
      }
    }
  }

  Raster<std::uint8_t> seen(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!branchy(x, y) || seen(x, y)) continue;
      TraceNode node;
      node.kind = PointKind::kJunction;
      std::vector<Pixel> stack{{x, y}};
      seen(x, y) = 1;
      while (!stack.empty()) {
        const Pixel p = stack.back();
        stack.pop_back();
        node.members.push_back(p);
        for (const Pixel& o : kRing) {
          const Pixel q{p.x + o.x, p.y + o.y};
          if (branchy.contains(q) && branchy[q] && !seen[q]) {
            seen[q] = 1;
            stack.push_back(q);
          }
        }
      }
      std::sort(node.members.begin(), node.members.end());
      double cx = 0.0, cy = 0.0;
      for (const Pixel& p : node.members) {
        cx += p.x;
        cy += p.y;
      }
      cx /= static_cast<double>(node.members.size());
      cy /= static_cast<double>(node.members.size());
      double best = std::numeric_limits<double>::infinity();
      for (const Pixel& p : node.members) {
        const double d = (p.x - cx) * (p.x - cx) + (p.y - cy) * (p.y - cy);
        if (d < best) {
          best = d;
          node.rep = p;
        }
      }
      nodes.push_back(std::move(node));
    }
  }
  std::sort(nodes.begin(), nodes.end(),
            [](const TraceNode& a, const TraceNode& b) { return a.rep < b.rep; });
  return nodes;
}

SkeletonTrace trace_branches(const BinaryMask& skel, std::vector<TraceNode> nodes) {
  const int w = skel.width();
  const int h = skel.height();
  Raster<std::int32_t> node_of(w, h, -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const Pixel& p : nodes[i].members) node_of[p] = static_cast<std::int32_t>(i);
  }

  SkeletonTrace trace;
  Raster<std::uint8_t> visited(w, h);
  std::map<std::pair<int, int>, bool> direct;

  auto on = [&](Pixel q) { return skel.contains(q) && skel[q] != 0; };

  for (std::size_t ni = 0; ni < nodes.size(); ++ni) {
    const int a = static_cast<int>(ni);
    for (const Pixel& m : nodes[ni].members) {
      for (const Pixel& o : kRing) {
        const Pixel q{m.x + o.x, m.y + o.y};
        if (!on(q)) continue;
        const int nq = node_of[q];
        if (nq == a) continue;
        if (nq >= 0) {
          const std::pair<int, int> key = std::minmax(a, nq);
          if (direct.emplace(key, true).second) {
            const TraceNode& other = nodes[nq];
            trace.branches.push_back(
                {key.first, key.second,
                 step_length(nodes[ni].rep, m) + step_length(m, q) + step_length(q, other.rep),
                 {}});
          }
          continue;
        }
        if (visited[q]) continue;

        // Walk the chain starting at q.
        TraceBranch branch;
        branch.a = a;
        branch.b = -1;
        double length = step_length(nodes[ni].rep, m) + step_length(m, q);
        Pixel prev = m;
        Pixel cur = q;
        visited[cur] = 1;
        branch.path.push_back(cur);
        while (true) {
          int other_node = -1;
          Pixel other_pixel{};
          bool back_to_start = false;
          bool has_chain = false;
          Pixel chain_next{};
          for (const Pixel& o2 : kRing) {
            const Pixel r{cur.x + o2.x, cur.y + o2.y};
            if (r == prev || !on(r)) continue;
            const int nr = node_of[r];
            if (nr >= 0 && nr != a) {
              if (other_node < 0) {
                other_node = nr;
                other_pixel = r;
              }
            } else if (nr == a) {
              back_to_start = true;
            } else if (!visited[r] && !has_chain) {
              has_chain = true;
              chain_next = r;
            }
          }
          if (other_node >= 0) {
            length += step_length(cur, other_pixel) + step_length(other_pixel, nodes[other_node].rep);
            branch.b = other_node;
            break;
          }
          if (has_chain) {
            length += step_length(cur, chain_next);
            prev = cur;
            cur = chain_next;
            visited[cur] = 1;
            branch.path.push_back(cur);
            continue;
          }
          // Back to the starting node: a loop, or a thickness artefact.
          if (back_to_start && branch.path.size() > 2) nodes[ni].cycle = true;
          break;
        }
        if (branch.b >= 0) {
          branch.length = length;
          if (branch.a > branch.b) {
            std::swap(branch.a, branch.b);
            std::reverse(branch.path.begin(), branch.path.end());
          }
          trace.branches.push_back(std::move(branch));
        }
      }
    }
  }

  // Node-free loops.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!skel(x, y) || visited(x, y) || node_of(x, y) >= 0) continue;
      TraceNode loop;
      loop.rep = {x, y};
      loop.kind = PointKind::kIsolated;
      loop.cycle = true;
      std::vector<Pixel> stack{{x, y}};
      visited(x, y) = 1;
      while (!stack.empty()) {
        const Pixel p = stack.back();
        stack.pop_back();
        loop.members.push_back(p);
        for (const Pixel& o : kRing) {
          const Pixel q{p.x + o.x, p.y + o.y};
          if (on(q) && !visited[q] && node_of[q] < 0) {
            visited[q] = 1;
            stack.push_back(q);
          }
        }
      }
      std::sort(loop.members.begin(), loop.members.end());
      nodes.push_back(std::move(loop));
    }
  }

  trace.nodes = std::move(nodes);
  return trace;
}

void thin_to_unit_width(BinaryMask& skel) {
  // Stage 1 removes simple pixels with three or more neighbours, which thins
  // two-pixel ridges without touching line ends. Stage 2 removes corner pixels
  // whose two neighbours touch each other.
  auto sweep = [&](auto removable) {
    bool any = false;
    for (bool changed = true; changed;) {
      changed = false;
      for (int y = 0; y < skel.height(); ++y) {
        for (int x = 0; x < skel.width(); ++x) {
          if (!skel(x, y)) continue;
          const int bits = neighbourhood(skel, x, y);
          if (is_simple(bits) && removable(bits)) {
            skel(x, y) = 0;
            changed = any = true;
          }
        }
      }
    }
    return any;
  };
  auto crowded = [](int bits) { return std::popcount(static_cast<unsigned>(bits)) >= 3; };
  auto corner = [](int bits) {
    if (std::popcount(static_cast<unsigned>(bits)) != 2) return false;
    const int i = std::countr_zero(static_cast<unsigned>(bits));
    const int j = 31 - std::countl_zero(static_cast<unsigned>(bits));
    return std::abs(kRing[i].x - kRing[j].x) <= 1 && std::abs(kRing[i].y - kRing[j].y) <= 1;
  };
  do {
    sweep(crowded);
  } while (sweep(corner));
}

}  // namespace dropgraph::detail
