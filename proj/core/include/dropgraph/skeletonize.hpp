#pragma once

#include <cstdint>
#include <vector>

#include "dropgraph/image.hpp"
#include "dropgraph/morphology.hpp"

namespace dropgraph {

/// One closed boundary walk. Consecutive pixels (including last -> first)
/// are 8-adjacent and distinct; a pixel on a one-pixel-wide neck appears
/// once per pass.
struct Contour {
  std::vector<Pixel> walk;
  /// Cumulative arc length at each walk position; arc[0] == 0.
  std::vector<double> arc;
  double length = 0.0;  // closed length, including the step back to walk[0]
};

struct BoundarySet {
  /// mask minus its erosion by the structuring element.
  BinaryMask ring;
  /// Crack-following traces of the mask outline, outer and hole contours,
  /// in raster order of their starting pixel.
  std::vector<Contour> contours;
  /// Contour that first visits each pixel, or -1.
  Raster<std::int32_t> contour_of;

  bool empty() const { return contours.empty(); }
  double total_length() const;
};

/// Exact Euclidean distance to the nearest ring pixel, stored both as the
/// integer squared distance and its square root. `nearest` is a ring pixel
/// realising the minimum.
struct DistanceField {
  Raster<std::int64_t> squared;
  Raster<double> distance;
  Raster<Pixel> nearest;

  int width() const { return distance.width(); }
  int height() const { return distance.height(); }
  double operator()(int x, int y) const { return distance(x, y); }
};

/// Arc length along each contour. The contour containing `start` is measured
/// from it; other contours from their first walk pixel. Off-contour pixels
/// hold a negative value.
struct GeodesicField {
  Pixel start;
  Raster<double> arc;
  Raster<std::int32_t> contour_of;
};

struct Skeleton {
  BinaryMask pixels;
  /// Boundary arc separation of each pixel's nearest generators.
  Raster<double> support;
  /// Distance-field value (inscribed radius) per pixel.
  Raster<double> radius;
  /// Set when tau reaches the total boundary length; the skeleton is empty.
  bool tau_exceeds_boundary = false;

  std::size_t size() const { return count_foreground(pixels); }
};

enum class PointKind { kEndpoint, kJunction, kIsolated };

const char* to_string(PointKind kind);

struct CriticalPoint {
  Pixel at;
  PointKind kind = PointKind::kEndpoint;
  /// Skeleton pixels collapsed into this point (junction clusters); always
  /// contains `at`.
  std::vector<Pixel> cluster;
  /// Number of skeleton branches leaving the point.
  int degree = 0;
};

using CriticalPointSet = std::vector<CriticalPoint>;

/// Fills background components that dilation by `se` from the image border
/// cannot reach (holes).
BinaryMask clear_border_minima(const BinaryMask& mask, const StructuringElement& se);

/// mask minus (mask eroded by se), with the image border counted as
/// background, plus the traced outline contours.
BoundarySet boundary(const BinaryMask& mask, const StructuringElement& se);

/// Throws kEmptyBoundary when the ring is empty.
DistanceField distance_transform(const BinaryMask& mask, const BoundarySet& boundary);

/// Throws kNotOnBoundary when `start` is not on any contour.
GeodesicField geodesic_field(const BoundarySet& boundary, Pixel start);

/// Per-pixel boundary support: the boundary arc separating the nearest
/// generators of a pixel and its +x / +y neighbours, combined over two arc
/// parametrisations with different seams.
Raster<double> boundary_support(const BinaryMask& mask, const BoundarySet& boundary,
                                const DistanceField& dt);

/// Thin skeleton of the pixels whose boundary support exceeds `tau`,
/// homotopic to the mask.
Skeleton skeleton_from_support(const BinaryMask& mask, const BoundarySet& boundary,
                               const DistanceField& dt, double tau);

/// Endpoints (one neighbour), junctions (merged clusters of pixels with three
/// or more neighbours) and isolated single-pixel components.
CriticalPointSet critical_points(const Skeleton& skel);

struct SkeletonParams {
  int se_radius = 4;
  double tau = 10.0;
};

struct SkeletonResult {
  BinaryMask cleaned;
  BoundarySet boundary;
  DistanceField dt;
  Skeleton skeleton;
  CriticalPointSet critical;
};

/// Full mask -> critical point pipeline: hole clearing with the configured
/// disk, unit boundary, distance transform, support skeleton, critical points.
SkeletonResult skeletonize(const BinaryMask& mask, const SkeletonParams& params = {});

}  // namespace dropgraph
