#include "dropgraph/image.hpp"

#include <algorithm>

namespace dropgraph {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameter: return "parameter";
    case ErrorKind::kNoRoi: return "no-roi";
    case ErrorKind::kEmptyBoundary: return "empty-boundary";
    case ErrorKind::kNotOnBoundary: return "not-on-boundary";
    case ErrorKind::kDuplicatePoints: return "duplicate-points";
    case ErrorKind::kInvalidRoot: return "invalid-root";
    case ErrorKind::kNodeMismatch: return "node-mismatch";
    case ErrorKind::kEmptyInput: return "empty-input";
    case ErrorKind::kUnsupportedCodec: return "unsupported-codec";
    case ErrorKind::kDecode: return "decode";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kSpec: return "spec";
  }
  return "unknown";
}

std::size_t count_foreground(const BinaryMask& mask) {
  const auto px = mask.pixels();
  return static_cast<std::size_t>(std::count(px.begin(), px.end(), std::uint8_t{1}));
}

BinaryMask invert(const BinaryMask& mask) {
  BinaryMask out(mask.width(), mask.height());
  auto src = mask.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] ? 0 : 1;
  return out;
}

BinaryMask rotate90(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask out(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) out(h - 1 - y, x) = mask(x, y);
  }
  return out;
}

Raster<std::uint8_t> render_mask(const BinaryMask& mask) {
  Raster<std::uint8_t> out(mask.width(), mask.height());
  auto src = mask.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] ? 255 : 0;
  return out;
}

}  // namespace dropgraph
