#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dropgraph/skeletonize.hpp"

namespace dropgraph {

struct GraphNode {
  int id = 0;
  Pixel at;
  PointKind kind = PointKind::kEndpoint;
  /// Set for the synthetic node standing in for a skeleton loop without
  /// critical points, or a junction whose branch returns to itself.
  bool cycle = false;
};

struct GraphEdge {
  int a = 0;
  int b = 0;
  double length = 0.0;  // arc length along the skeleton, in pixels
};

struct DropletGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  /// Node ids per connected component, each sorted, components ordered by
  /// their smallest id.
  std::vector<std::vector<int>> components;

  std::vector<int> degrees() const;
};

struct GraphStats {
  int d = 0;  // connected components
  int n = 0;  // nodes
  int leaves = 0;    // B: degree-1 nodes
  int internal = 0;  // N: degree >= 3 nodes
  /// B / N; empty when N == 0.
  std::optional<double> bn_ratio;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

struct TreeEdge {
  int a = 0;  // a < b
  int b = 0;
  double length = 0.0;
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

struct SpanningTree {
  int root = 0;
  std::vector<TreeEdge> edges;  // sorted by (a, b)
  double total_length = 0.0;
};

DropletGraph build_graph(const Skeleton& skel, const CriticalPointSet& cp);

/// Connected components over an explicit node/edge list, as node-id groups.
std::vector<std::vector<int>> connected_components(int node_count,
                                                   const std::vector<std::pair<int, int>>& edges);

int count_components(const DropletGraph& g);
GraphStats graph_stats(const DropletGraph& g);

/// Exact Euclidean MST (Kruskal). Equal lengths resolve by the smaller
/// (min id, max id) pair. Throws kDuplicatePoints / kEmptyInput.
SpanningTree euclidean_mst(const std::vector<Pixel>& points);

/// Greedy nearest attachment from `root`: each step attaches the unattached
/// point closest to the tree; ties go to the smaller new id, then the smaller
/// parent id. Throws kInvalidRoot.
SpanningTree grown_tree(const std::vector<Pixel>& points, int root);

/// Tree edges whose endpoint pair is not adjacent in `g`. Tree node i is
/// graph node i. Throws kNodeMismatch when the tree references missing nodes.
int tree_mismatch(const DropletGraph& g, const SpanningTree& t);

struct GrownTreeChoice {
  int root = 0;
  SpanningTree tree;
  std::optional<int> mismatch;  // versus the reference graph, when given
};

/// Runs grown_tree from every root and keeps the shortest tree, then the one
/// with fewest mismatches against `reference`, then the smallest root.
/// Throws kEmptyInput for fewer than two points.
GrownTreeChoice best_grown_tree(const std::vector<Pixel>& points,
                                const DropletGraph* reference = nullptr);

/// Node coordinates in id order.
std::vector<Pixel> node_points(const DropletGraph& g);

struct FrequencyTable {
  std::map<int, std::size_t> counts;
  std::map<int, double> percent;
};

struct BranchHistogram {
  FrequencyTable leaves;  // keyed by B
  /// bn_ratio values (exact doubles) -> count; undefined ratios counted apart.
  std::map<double, std::size_t> bn_counts;
  std::map<double, double> bn_percent;
  std::size_t bn_undefined = 0;
  double bn_undefined_percent = 0.0;
  std::size_t total = 0;
};

/// Throws kEmptyInput on an empty corpus.
BranchHistogram branch_histogram(const std::vector<GraphStats>& corpus);

/// Value -> count and percentage over a list of integers (d, n densities).
FrequencyTable frequency_table(const std::vector<int>& values);

}  // namespace dropgraph
