#include "dropgraph/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace dropgraph {

std::size_t compressibility(const BinaryMask& mask, Codec codec, int quality) {
  const auto gray = render_mask(mask);
  switch (codec) {
    case Codec::kPng:
      return encode_png_gray(gray).size();
    case Codec::kJpeg: {
      JpegSettings settings;
      settings.quality = quality;
      return encode_jpeg_gray(gray, settings).size();
    }
  }
  throw Error(ErrorKind::kUnsupportedCodec, "unsupported codec");
}

int window_code(const BinaryMask& mask, int x, int y) {
  int code = 0;
  for (int dy = 0; dy < 3; ++dy) {
    for (int dx = 0; dx < 3; ++dx) code = (code << 1) | (mask(x + dx, y + dy) ? 1 : 0);
  }
  return code;
}

MrHistogram mr_histogram(const BinaryMask& mask) {
  if (mask.width() < 3 || mask.height() < 3) {
    throw Error(ErrorKind::kParameter, "morphological richness needs at least a 3x3 image");
  }
  MrHistogram h;
  for (int y = 0; y + 2 < mask.height(); ++y) {
    for (int x = 0; x + 2 < mask.width(); ++x) {
      ++h.counts[window_code(mask, x, y)];
      ++h.total;
    }
  }
  return h;
}

double morphological_richness(const MrHistogram& h) {
  const auto present = std::count_if(h.counts.begin(), h.counts.end(),
                                     [](std::uint64_t c) { return c > 0; });
  return static_cast<double>(present) / 512.0;
}

double mr_entropy(const MrHistogram& h) {
  if (h.total == 0) return 0.0;
  const double total = static_cast<double>(h.total);
  double bits = 0.0;
  for (std::uint64_t c : h.counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    bits -= p * std::log2(p);
  }
  return bits;
}

std::vector<SpectrumBin> power_spectrum(const std::vector<double>& series) {
  const std::size_t n = series.size();
  if (n < 2) throw Error(ErrorKind::kParameter, "power spectrum needs at least two samples");
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);
  // A constant series must have exactly zero deviation despite rounding.
  if (std::all_of(series.begin(), series.end(), [&](double v) { return v == series.front(); })) {
    mean = series.front();
  }

  std::vector<SpectrumBin> out;
  out.reserve(n / 2 + 1);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      // Reduce k*t modulo n before scaling to keep the phase exact.
      const double phase = -2.0 * std::numbers::pi * static_cast<double>((k * t) % n) /
                           static_cast<double>(n);
      acc += (series[t] - mean) * std::polar(1.0, phase);
    }
    out.push_back({static_cast<int>(k), std::norm(acc)});
  }
  return out;
}

std::optional<int> dominating_frequency(const std::vector<SpectrumBin>& spectrum) {
  if (spectrum.empty()) throw Error(ErrorKind::kEmptyInput, "empty spectrum");
  std::optional<int> best;
  double best_power = 0.0;
  for (const SpectrumBin& b : spectrum) {
    if (b.bin == 0) continue;
    if (b.power > best_power) {
      best_power = b.power;
      best = b.bin;
    }
  }
  return best;
}

Matrix mr_distance_matrix(const std::vector<MrHistogram>& hists) {
  if (hists.size() < 2) throw Error(ErrorKind::kParameter, "distance matrix needs two histograms");
  const std::size_t n = hists.size();
  std::vector<std::array<double, 512>> prob(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double total = static_cast<double>(std::max<std::uint64_t>(hists[i].total, 1));
    for (std::size_t b = 0; b < 512; ++b) prob[i][b] = static_cast<double>(hists[i].counts[b]) / total;
  }
  Matrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t b = 0; b < 512; ++b) {
        const double diff = prob[i][b] - prob[j][b];
        s += diff * diff;
      }
      d[i][j] = d[j][i] = std::sqrt(s);
    }
  }
  return d;
}

double adjacency_entropy(const Triangulation& t) {
  const std::size_t n = t.vertices.size();
  if (n < 2) return 0.0;
  const double cells = static_cast<double>(n) * static_cast<double>(n);
  const double p1 = 2.0 * static_cast<double>(t.edge_count()) / cells;
  auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return term(p1) + term(1.0 - p1);
}

StSet st_stats(const std::vector<double>& values) {
  if (values.empty()) throw Error(ErrorKind::kEmptyInput, "statistics of an empty list");
  StSet s;
  s.max = *std::max_element(values.begin(), values.end());
  s.min = *std::min_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(sq / static_cast<double>(values.size()));
  return s;
}

}  // namespace dropgraph
