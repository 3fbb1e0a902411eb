#pragma once

#include <vector>

#include "dropgraph/image.hpp"

namespace dropgraph {

/// Disk-shaped structuring element: offset (dx, dy) is a member iff
/// dx*dx + dy*dy <= radius*radius.
class StructuringElement {
 public:
  explicit StructuringElement(int radius = 4);

  int radius() const noexcept { return radius_; }
  const std::vector<Pixel>& offsets() const noexcept { return offsets_; }

 private:
  int radius_;
  std::vector<Pixel> offsets_;
};

/// How erosion treats pixels outside the raster.
enum class OutsideIs {
  kBackground,  // objects touching the image edge erode from the edge
  kForeground,  // adjunct of zero-padded dilation; keeps closing extensive
};

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se);
BinaryMask erode(const BinaryMask& mask, const StructuringElement& se,
                 OutsideIs outside = OutsideIs::kForeground);

BinaryMask close(const BinaryMask& mask, const StructuringElement& se);
BinaryMask open(const BinaryMask& mask, const StructuringElement& se);

}  // namespace dropgraph
