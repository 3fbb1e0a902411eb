#pragma once

// Pixel-level topology helpers shared by the skeleton and graph stages.

#include <array>
#include <cstdint>
#include <vector>

#include "dropgraph/image.hpp"
#include "dropgraph/skeletonize.hpp"

namespace dropgraph::detail {

/// Cyclic neighbour order E, NE, N, NW, W, SW, S, SE.
inline constexpr std::array<Pixel, 8> kRing = {
    Pixel{1, 0}, Pixel{1, -1}, Pixel{0, -1}, Pixel{-1, -1},
    Pixel{-1, 0}, Pixel{-1, 1}, Pixel{0, 1}, Pixel{1, 1}};

/// Bit k set when the k-th ring neighbour is foreground (off-raster = 0).
int neighbourhood(const BinaryMask& mask, int x, int y);

/// Removing the pixel preserves 8-foreground / 4-background topology.
bool is_simple(int neighbourhood_bits);

int degree(const BinaryMask& mask, int x, int y);

double step_length(Pixel a, Pixel b);

struct TraceNode {
  Pixel rep;
  PointKind kind = PointKind::kEndpoint;
  std::vector<Pixel> members;
  bool cycle = false;
};

struct TraceBranch {
  int a = 0;
  int b = 0;
  double length = 0.0;
  std::vector<Pixel> path;  // chain pixels strictly between the two nodes
};

struct SkeletonTrace {
  std::vector<TraceNode> nodes;
  std::vector<TraceBranch> branches;
};

/// Endpoints, isolated pixels, and 8-connected clusters of pixels with three
/// or more neighbours, ordered by representative pixel. Junction
/// representatives are the cluster pixel nearest the cluster centroid.
std::vector<TraceNode> derive_nodes(const BinaryMask& skel);

/// Walks every chain between the given nodes. Chains that return to their
/// own node are dropped (and flag the node as a cycle when longer than a
/// pixel-thickness artefact); leftover node-free loops gain a synthetic node.
SkeletonTrace trace_branches(const BinaryMask& skel, std::vector<TraceNode> nodes);

/// Raster-sweep thinning to unit width: simple pixels with three or more
/// neighbours first, then redundant corner pixels. Endpoints and topology are
/// preserved.
void thin_to_unit_width(BinaryMask& skel);

}  // namespace dropgraph::detail
