#include "dropgraph/segmentation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>

#include "dropgraph/morphology.hpp"

namespace dropgraph {

Hsv rgb_to_hsv(Rgb rgb) {
  const double r = rgb.r / 255.0;
  const double g = rgb.g / 255.0;
  const double b = rgb.b / 255.0;
  const double hi = std::max({r, g, b});
  const double lo = std::min({r, g, b});
  const double delta = hi - lo;

  Hsv out;
  out.v = hi;
  out.s = hi > 0.0 ? delta / hi : 0.0;
  if (delta <= 0.0) {
    out.h = 0.0;
    return out;
  }
  double h = 0.0;
  if (hi == r) {
    h = 60.0 * ((g - b) / delta);
  } else if (hi == g) {
    h = 60.0 * ((b - r) / delta + 2.0);
  } else {
    h = 60.0 * ((r - g) / delta + 4.0);
  }
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h -= 360.0;
  out.h = h;
  return out;
}

Rgb hsv_to_rgb(Hsv hsv) {
  const double c = hsv.v * hsv.s;
  const double hp = hsv.h / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(hp) % 6) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double m = hsv.v - c;
  auto to8 = [](double v) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v * 255.0), 0L, 255L));
  };
  return {to8(r + m), to8(g + m), to8(b + m)};
}

HsvImage rgb_to_hsv(const ColorImage& img) {
  HsvImage out(img.width(), img.height());
  auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = rgb_to_hsv(src[i]);
  return out;
}

GrayImage extract_channel(const HsvImage& img, Channel channel) {
  GrayImage out(img.width(), img.height());
  auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) {
    switch (channel) {
      case Channel::kHue: dst[i] = src[i].h / 360.0; break;
      case Channel::kSaturation: dst[i] = src[i].s; break;
      case Channel::kValue: dst[i] = src[i].v; break;
    }
  }
  return out;
}

namespace {

int reflect101(int i, int n) {
  if (i < 0) return -i;
  if (i >= n) return 2 * n - 2 - i;
  return i;
}

}  // namespace

BinaryMask adaptive_threshold(const GrayImage& img, int window, double offset) {
  const int w = img.width();
  const int h = img.height();
  if (window < 3 || window % 2 == 0 || window > std::min(w, h)) {
    throw Error(ErrorKind::kParameter,
                "threshold window must be odd, >= 3 and <= min(width, height)");
  }
  const int half = window / 2;

  GrayImage rows(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double s = 0.0;
      for (int k = -half; k <= half; ++k) s += img(reflect101(x + k, w), y);
      rows(x, y) = s;
    }
  }

  const double area = static_cast<double>(window) * window;
  BinaryMask out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double s = 0.0;
      for (int k = -half; k <= half; ++k) s += rows(x, reflect101(y + k, h));
      out(x, y) = img(x, y) > s / area + offset ? 1 : 0;
    }
  }
  return out;
}

namespace {

int intensity_bin(double v) {
  return static_cast<int>(std::clamp(std::lround(v * 255.0), 0L, 255L));
}

int otsu_bin(const GrayImage& img) {
  std::array<double, 256> hist{};
  for (double v : img.pixels()) hist[intensity_bin(v)] += 1.0;
  const double total = static_cast<double>(img.size());
  double sum_all = 0.0;
  for (int i = 0; i < 256; ++i) sum_all += i * hist[i];

  double w0 = 0.0, sum0 = 0.0, best = -1.0;
  int best_t = 0;
  for (int t = 0; t < 256; ++t) {
    w0 += hist[t];
    sum0 += t * hist[t];
    const double w1 = total - w0;
    if (w0 == 0.0 || w1 == 0.0) continue;
    const double m0 = sum0 / w0;
    const double m1 = (sum_all - sum0) / w1;
    const double between = w0 * w1 * (m0 - m1) * (m0 - m1);
    if (between > best) {
      best = between;
      best_t = t;
    }
  }
  return best_t;
}

}  // namespace

double otsu_level(const GrayImage& img) { return otsu_bin(img) / 255.0; }

BinaryMask otsu_threshold(const GrayImage& img) {
  const int t = otsu_bin(img);
  BinaryMask out(img.width(), img.height());
  auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = intensity_bin(src[i]) > t ? 1 : 0;
  return out;
}

std::vector<Region> label_regions(const BinaryMask& mask, Connectivity connectivity) {
  static constexpr std::array<Pixel, 8> kEight = {
      Pixel{1, 0}, Pixel{-1, 0}, Pixel{0, 1}, Pixel{0, -1},
      Pixel{1, 1}, Pixel{-1, 1}, Pixel{1, -1}, Pixel{-1, -1}};
  const int steps = connectivity == Connectivity::kEight ? 8 : 4;
  const double area = static_cast<double>(mask.size());

  Raster<std::uint8_t> seen(mask.width(), mask.height());
  std::vector<Region> regions;
  std::deque<Pixel> queue;
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (!mask(x, y) || seen(x, y)) continue;
      Region region;
      region.label = static_cast<int>(regions.size()) + 1;
      seen(x, y) = 1;
      queue.push_back({x, y});
      while (!queue.empty()) {
        const Pixel p = queue.front();
        queue.pop_front();
        region.pixels.push_back(p);
        for (int k = 0; k < steps; ++k) {
          const Pixel q{p.x + kEight[k].x, p.y + kEight[k].y};
          if (mask.contains(q) && mask[q] && !seen[q]) {
            seen[q] = 1;
            queue.push_back(q);
          }
        }
      }
      std::sort(region.pixels.begin(), region.pixels.end());
      region.coverage = static_cast<double>(region.pixels.size()) / area;
      regions.push_back(std::move(region));
    }
  }
  return regions;
}

const Region& select_roi(const std::vector<Region>& regions) {
  if (regions.empty()) throw Error(ErrorKind::kNoRoi, "no foreground region");
  const Region* best = &regions.front();
  for (const Region& r : regions) {
    if (r.coverage > best->coverage ||
        (r.coverage == best->coverage && r.label < best->label)) {
      best = &r;
    }
  }
  return *best;
}

BinaryMask region_mask(const Region& region, int width, int height) {
  BinaryMask out(width, height);
  for (const Pixel& p : region.pixels) out[p] = 1;
  return out;
}

double normalized_coverage(const BinaryMask& mask) {
  if (mask.empty()) return 0.0;
  return static_cast<double>(count_foreground(mask)) / static_cast<double>(mask.size());
}

BinaryMask morphological_close_open(const BinaryMask& mask, int se_radius) {
  if (se_radius < 1) throw Error(ErrorKind::kParameter, "se_radius must be >= 1");
  const StructuringElement se(se_radius);
  return open(close(mask, se), se);
}

}  // namespace dropgraph
