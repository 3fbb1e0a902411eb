#include "dropgraph/morphology.hpp"

namespace dropgraph {

StructuringElement::StructuringElement(int radius) : radius_(radius) {
  if (radius < 0) throw Error(ErrorKind::kParameter, "structuring element radius must be >= 0");
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (dx * dx + dy * dy <= radius * radius) offsets_.push_back({dx, dy});
    }
  }
}

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se) {
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask(x, y)) continue;
      for (const Pixel& o : se.offsets()) {
        const int nx = x + o.x;
        const int ny = y + o.y;
        if (out.contains(nx, ny)) out(nx, ny) = 1;
      }
    }
  }
  return out;
}

BinaryMask erode(const BinaryMask& mask, const StructuringElement& se, OutsideIs outside) {
  const int w = mask.width();
  const int h = mask.height();
  const std::uint8_t pad = outside == OutsideIs::kForeground ? 1 : 0;
  BinaryMask out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask(x, y)) continue;
      bool keep = true;
      for (const Pixel& o : se.offsets()) {
        if (!mask.at_or(x + o.x, y + o.y, pad)) {
          keep = false;
          break;
        }
      }
      out(x, y) = keep ? 1 : 0;
    }
  }
  return out;
}

BinaryMask close(const BinaryMask& mask, const StructuringElement& se) {
  return erode(dilate(mask, se), se, OutsideIs::kForeground);
}

BinaryMask open(const BinaryMask& mask, const StructuringElement& se) {
  return dilate(erode(mask, se, OutsideIs::kForeground), se);
}

}  // namespace dropgraph
