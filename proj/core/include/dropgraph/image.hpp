#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dropgraph/error.hpp"

namespace dropgraph {

struct Pixel {
  int x = 0;
  int y = 0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
  // Raster order: row first, then column.
  friend bool operator<(const Pixel& a, const Pixel& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
};

/// Row-major 2D buffer. Width and height are fixed at construction.
template <typename T>
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, T fill = T{})
      : width_(width), height_(height) {
    if (width < 0 || height < 0) {
      throw Error(ErrorKind::kParameter, "raster dimensions must be non-negative");
    }
    data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  bool contains(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  bool contains(Pixel p) const noexcept { return contains(p.x, p.y); }

  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  T& operator()(int x, int y) { return data_[index(x, y)]; }
  const T& operator()(int x, int y) const { return data_[index(x, y)]; }
  T& operator[](Pixel p) { return data_[index(p.x, p.y)]; }
  const T& operator[](Pixel p) const { return data_[index(p.x, p.y)]; }

  /// Value at (x, y), or `outside` when the coordinate is off the raster.
  T at_or(int x, int y, T outside) const noexcept {
    return contains(x, y) ? data_[index(x, y)] : outside;
  }

  std::span<T> pixels() noexcept { return data_; }
  std::span<const T> pixels() const noexcept { return data_; }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Hue in degrees [0, 360); saturation and value in [0, 1].
struct Hsv {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

using ColorImage = Raster<Rgb>;
using HsvImage = Raster<Hsv>;
using GrayImage = Raster<double>;
/// Values are exactly 0 or 1; 1 is foreground.
using BinaryMask = Raster<std::uint8_t>;

std::size_t count_foreground(const BinaryMask& mask);

BinaryMask invert(const BinaryMask& mask);

/// 90 degree clockwise rotation: (x, y) -> (h - 1 - y, x).
BinaryMask rotate90(const BinaryMask& mask);

/// 8-bit grayscale render, 0 -> 0 and 1 -> 255.
Raster<std::uint8_t> render_mask(const BinaryMask& mask);

}  // namespace dropgraph
