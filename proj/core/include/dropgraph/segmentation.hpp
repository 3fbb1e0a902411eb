#pragma once

#include <vector>

#include "dropgraph/image.hpp"

namespace dropgraph {

enum class Channel { kHue, kSaturation, kValue };

/// 4 or 8 neighbour connectivity for labelling.
enum class Connectivity { kFour = 4, kEight = 8 };

struct Region {
  int label = 0;
  std::vector<Pixel> pixels;  // raster order
  double coverage = 0.0;      // |pixels| / (width * height)
};

/// Hexcone RGB -> HSV. Achromatic pixels get hue 0.
Hsv rgb_to_hsv(Rgb rgb);
Rgb hsv_to_rgb(Hsv hsv);
HsvImage rgb_to_hsv(const ColorImage& img);

/// Selected component as intensities in [0, 1]; hue is divided by 360.
GrayImage extract_channel(const HsvImage& img, Channel channel);

/// Pixel is foreground iff value > (window mean) + offset. The window is a
/// `window` x `window` box centred on the pixel with reflect-101 padding.
/// Throws kParameter unless 3 <= window <= min(width, height) and window is odd.
BinaryMask adaptive_threshold(const GrayImage& img, int window, double offset);

/// Otsu's global threshold over a 256-bin histogram of [0, 1] intensities.
double otsu_level(const GrayImage& img);
BinaryMask otsu_threshold(const GrayImage& img);

/// Maximal connected foreground sets, labelled 1.. in raster order of their
/// first pixel.
std::vector<Region> label_regions(const BinaryMask& mask,
                                  Connectivity connectivity = Connectivity::kEight);

/// Region with maximal coverage; ties go to the smallest label.
/// Throws kNoRoi on an empty list.
const Region& select_roi(const std::vector<Region>& regions);

BinaryMask region_mask(const Region& region, int width, int height);

double normalized_coverage(const BinaryMask& mask);

/// Closing followed by opening with a disk of `se_radius`.
BinaryMask morphological_close_open(const BinaryMask& mask, int se_radius);

}  // namespace dropgraph
