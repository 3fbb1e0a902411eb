#include "dropgraph/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

#include "topology.hpp"

namespace dropgraph {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::int64_t squared_distance(Pixel a, Pixel b) {
  const std::int64_t dx = a.x - b.x;
  const std::int64_t dy = a.y - b.y;
  return dx * dx + dy * dy;
}

void finish_tree(SpanningTree& tree, const std::vector<Pixel>& points) {
  for (TreeEdge& e : tree.edges) {
    if (e.a > e.b) std::swap(e.a, e.b);
    e.length = std::sqrt(static_cast<double>(squared_distance(points[e.a], points[e.b])));
  }
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const TreeEdge& x, const TreeEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  // Summed in edge order so equal edge sets give bit-identical totals.
  tree.total_length = 0.0;
  for (const TreeEdge& e : tree.edges) tree.total_length += e.length;
}

void require_distinct(const std::vector<Pixel>& points) {
  std::vector<Pixel> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::kDuplicatePoints, "point set contains duplicate coordinates");
  }
}

}  // namespace

std::vector<int> DropletGraph::degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (const GraphEdge& e : edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

std::vector<std::vector<int>> connected_components(int node_count,
                                                   const std::vector<std::pair<int, int>>& edges) {
  DisjointSets sets(static_cast<std::size_t>(node_count));
  for (const auto& [a, b] : edges) sets.unite(a, b);
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(static_cast<std::size_t>(node_count), -1);
  for (int i = 0; i < node_count; ++i) {
    const auto root = sets.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return groups;
}

DropletGraph build_graph(const Skeleton& skel, const CriticalPointSet& cp) {
  std::vector<detail::TraceNode> nodes;
  nodes.reserve(cp.size());
  for (const CriticalPoint& p : cp) {
    detail::TraceNode node;
    node.rep = p.at;
    node.kind = p.kind;
    node.members = p.cluster.empty() ? std::vector<Pixel>{p.at} : p.cluster;
    nodes.push_back(std::move(node));
  }
  const detail::SkeletonTrace trace = detail::trace_branches(skel.pixels, std::move(nodes));

  DropletGraph g;
  for (std::size_t i = 0; i < trace.nodes.size(); ++i) {
    const auto& n = trace.nodes[i];
    const bool loop = n.kind == PointKind::kIsolated && n.members.size() > 1;
    g.nodes.push_back({static_cast<int>(i), n.rep, n.kind, n.cycle || loop});
  }
  for (const auto& b : trace.branches) g.edges.push_back({b.a, b.b, b.length});
  std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
    return std::tie(x.a, x.b, x.length) < std::tie(y.a, y.b, y.length);
  });

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edges.size());
  for (const GraphEdge& e : g.edges) pairs.emplace_back(e.a, e.b);
  g.components = connected_components(static_cast<int>(g.nodes.size()), pairs);
  return g;
}

int count_components(const DropletGraph& g) { return static_cast<int>(g.components.size()); }

GraphStats graph_stats(const DropletGraph& g) {
  GraphStats s;
  s.d = count_components(g);
  s.n = static_cast<int>(g.nodes.size());
  for (int deg : g.degrees()) {
    if (deg == 1) ++s.leaves;
    if (deg >= 3) ++s.internal;
  }
  if (s.internal > 0) s.bn_ratio = static_cast<double>(s.leaves) / s.internal;
  return s;
}

SpanningTree euclidean_mst(const std::vector<Pixel>& points) {
  if (points.empty()) throw Error(ErrorKind::kEmptyInput, "spanning tree needs at least one point");
  require_distinct(points);
  const int n = static_cast<int>(points.size());
  std::vector<std::tuple<std::int64_t, int, int>> candidates;
  candidates.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) candidates.emplace_back(squared_distance(points[i], points[j]), i, j);
  }
  std::sort(candidates.begin(), candidates.end());

  SpanningTree tree;
  DisjointSets sets(points.size());
  for (const auto& [sq, i, j] : candidates) {
    if (sets.unite(i, j)) {
      tree.edges.push_back({i, j, 0.0});
      if (static_cast<int>(tree.edges.size()) == n - 1) break;
    }
  }
  finish_tree(tree, points);
  return tree;
}

SpanningTree grown_tree(const std::vector<Pixel>& points, int root) {
  const int n = static_cast<int>(points.size());
  if (root < 0 || root >= n) throw Error(ErrorKind::kInvalidRoot, "root is not a point index");
  require_distinct(points);

  constexpr std::int64_t kFar = std::numeric_limits<std::int64_t>::max();
  std::vector<bool> attached(n, false);
  std::vector<std::int64_t> best(n, kFar);
  std::vector<int> parent(n, -1);

  SpanningTree tree;
  tree.root = root;
  int newest = root;
  attached[root] = true;
  for (int added = 1; added < n; ++added) {
    for (int u = 0; u < n; ++u) {
      if (attached[u]) continue;
      const std::int64_t d = squared_distance(points[newest], points[u]);
      if (d < best[u] || (d == best[u] && newest < parent[u])) {
        best[u] = d;
        parent[u] = newest;
      }
    }
    int pick = -1;
    for (int u = 0; u < n; ++u) {
      if (attached[u]) continue;
      if (pick < 0 || best[u] < best[pick]) pick = u;
    }
    attached[pick] = true;
    tree.edges.push_back({parent[pick], pick, 0.0});
    newest = pick;
  }
  finish_tree(tree, points);
  return tree;
}

int tree_mismatch(const DropletGraph& g, const SpanningTree& t) {
  const int n = static_cast<int>(g.nodes.size());
  std::set<std::pair<int, int>> adjacent;
  for (const GraphEdge& e : g.edges) adjacent.insert(std::minmax(e.a, e.b));
  int mismatches = 0;
  for (const TreeEdge& e : t.edges) {
    if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n) {
      throw Error(ErrorKind::kNodeMismatch, "tree references a node outside the graph");
    }
    if (!adjacent.contains(std::minmax(e.a, e.b))) ++mismatches;
  }
  return mismatches;
}

GrownTreeChoice best_grown_tree(const std::vector<Pixel>& points, const DropletGraph* reference) {
  if (points.size() < 2) throw Error(ErrorKind::kEmptyInput, "need at least two points");
  std::optional<GrownTreeChoice> best;
  for (int root = 0; root < static_cast<int>(points.size()); ++root) {
    GrownTreeChoice candidate{root, grown_tree(points, root), std::nullopt};
    if (reference) candidate.mismatch = tree_mismatch(*reference, candidate.tree);
    if (!best) {
      best = std::move(candidate);
      continue;
    }
    const double lhs = candidate.tree.total_length;
    const double rhs = best->tree.total_length;
    if (lhs < rhs || (lhs == rhs && candidate.mismatch.value_or(0) < best->mismatch.value_or(0))) {
      best = std::move(candidate);
    }
  }
  return *best;
}

std::vector<Pixel> node_points(const DropletGraph& g) {
  std::vector<Pixel> pts;
  pts.reserve(g.nodes.size());
  for (const GraphNode& n : g.nodes) pts.push_back(n.at);
  return pts;
}

FrequencyTable frequency_table(const std::vector<int>& values) {
  FrequencyTable table;
  for (int v : values) ++table.counts[v];
  for (const auto& [v, c] : table.counts) {
    table.percent[v] = 100.0 * static_cast<double>(c) / static_cast<double>(values.size());
  }
  return table;
}

BranchHistogram branch_histogram(const std::vector<GraphStats>& corpus) {
  if (corpus.empty()) throw Error(ErrorKind::kEmptyInput, "branch histogram of an empty corpus");
  BranchHistogram h;
  h.total = corpus.size();
  std::vector<int> leaves;
  leaves.reserve(corpus.size());
  for (const GraphStats& s : corpus) {
    leaves.push_back(s.leaves);
    if (s.bn_ratio) {
      ++h.bn_counts[*s.bn_ratio];
    } else {
      ++h.bn_undefined;
    }
  }
  h.leaves = frequency_table(leaves);
  const double total = static_cast<double>(corpus.size());
  for (const auto& [r, c] : h.bn_counts) h.bn_percent[r] = 100.0 * static_cast<double>(c) / total;
  h.bn_undefined_percent = 100.0 * static_cast<double>(h.bn_undefined) / total;
  return h;
}

}  // namespace dropgraph
