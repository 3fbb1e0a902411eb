#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dropgraph/codec.hpp"
#include "dropgraph/image.hpp"

namespace dropgraph {

/// Encoded byte size of the 0/255 render of `mask` under the pinned codec.
/// `quality` applies to JPEG only.
std::size_t compressibility(const BinaryMask& mask, Codec codec, int quality = 90);

/// Counts of the 512 possible 3x3 binary windows. Bin index is the 9-bit code
/// read row-major with the top-left cell as the most significant bit.
struct MrHistogram {
  std::array<std::uint64_t, 512> counts{};
  std::uint64_t total = 0;

  friend bool operator==(const MrHistogram&, const MrHistogram&) = default;
};

/// 9-bit code of the window whose top-left corner is (x, y).
int window_code(const BinaryMask& mask, int x, int y);

/// All (w-2)(h-2) interior windows. Throws kParameter below 3x3.
MrHistogram mr_histogram(const BinaryMask& mask);

/// Nonzero bins / 512.
double morphological_richness(const MrHistogram& h);

/// Shannon entropy in bits of the bin distribution.
double mr_entropy(const MrHistogram& h);

struct SpectrumBin {
  int bin = 0;
  double power = 0.0;
  friend bool operator==(const SpectrumBin&, const SpectrumBin&) = default;
};

/// |DFT|^2 of the mean-removed series for bins 0..floor(L/2).
/// Throws kParameter for fewer than two samples.
std::vector<SpectrumBin> power_spectrum(const std::vector<double>& series);

/// Non-DC bin of maximal power, lowest bin on ties; empty when every non-DC
/// bin is zero. Throws kEmptyInput on an empty spectrum.
std::optional<int> dominating_frequency(const std::vector<SpectrumBin>& spectrum);

using Matrix = std::vector<std::vector<double>>;

/// L2 distances between normalised histograms. Throws kParameter for fewer
/// than two histograms.
Matrix mr_distance_matrix(const std::vector<MrHistogram>& hists);

struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;  // counter-clockwise in a y-up frame, a is the smallest id
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

struct Triangulation {
  std::vector<Pixel> vertices;
  std::vector<Triangle> triangles;
  std::vector<std::vector<std::uint8_t>> adjacency;
  /// Fewer than three points or all collinear: adjacency is the chain of
  /// consecutive points along the line and there are no triangles.
  bool degenerate = false;

  std::size_t edge_count() const;
};

/// Delaunay triangulation with exact integer predicates. Cocircular groups
/// are triangulated as a fan from their lowest id. Throws kDuplicatePoints.
Triangulation delaunay(const std::vector<Pixel>& points);

/// Binary entropy of the share of ones over all n*n adjacency cells
/// (diagonal included); 0 for fewer than two vertices.
double adjacency_entropy(const Triangulation& t);

struct StSet {
  double max = 0.0;
  double min = 0.0;
  double mean = 0.0;
  double std = 0.0;  // population standard deviation

  friend bool operator==(const StSet&, const StSet&) = default;
};

/// Throws kEmptyInput on an empty list.
StSet st_stats(const std::vector<double>& values);

}  // namespace dropgraph
