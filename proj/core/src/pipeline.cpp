#include "dropgraph/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

#include "dropgraph/config.hpp"
#include "dropgraph/error.hpp"
#include "dropgraph/report.hpp"
#include "dropgraph/skeletonize.hpp"

namespace dropgraph {

namespace fs = std::filesystem;

const char* to_string(Channel channel) {
  switch (channel) {
    case Channel::kHue: return "hue";
    case Channel::kSaturation: return "saturation";
    case Channel::kValue: return "value";
  }
  return "?";
}

Channel parse_channel(const std::string& name) {
  if (name == "hue") return Channel::kHue;
  if (name == "saturation") return Channel::kSaturation;
  if (name == "value") return Channel::kValue;
  throw Error(ErrorKind::kParameter, "unknown channel: " + name);
}

const char* to_string(ThresholdMode mode) { return mode == ThresholdMode::kLocal ? "local" : "otsu"; }

ThresholdMode parse_threshold_mode(const std::string& name) {
  if (name == "local") return ThresholdMode::kLocal;
  if (name == "otsu") return ThresholdMode::kOtsu;
  throw Error(ErrorKind::kParameter, "unknown threshold mode: " + name);
}

const char* to_string(FrameStatus status) {
  switch (status) {
    case FrameStatus::kOk: return "ok";
    case FrameStatus::kNoRoi: return "no_roi";
    case FrameStatus::kError: return "error";
  }
  return "?";
}

void PipelineConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::kParameter, what); };
  if (threshold_window < 3 || threshold_window % 2 == 0) fail("threshold_window must be odd and >= 3");
  if (!std::isfinite(threshold_offset) || std::abs(threshold_offset) > 1.0) {
    fail("threshold_offset must lie in [-1, 1]");
  }
  if (cleanup_radius < 0 || cleanup_radius > 64) fail("cleanup_radius must lie in [0, 64]");
  if (se_radius < 1 || se_radius > 64) fail("se_radius must lie in [1, 64]");
  if (!std::isfinite(tau) || tau < 0.0) fail("tau must be a finite value >= 0");
  if (quality < 1 || quality > 100) fail("quality must lie in [1, 100]");
  if (connectivity != Connectivity::kFour && connectivity != Connectivity::kEight) {
    fail("connectivity must be 4 or 8");
  }
}

namespace {

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw Error(ErrorKind::kParameter, key + ": not an integer: " + v);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw Error(ErrorKind::kParameter, key + ": not a number: " + v);
  }
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw Error(ErrorKind::kParameter, key + ": expected true or false");
}

bool is_image_name(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::vector<DensityRow> density(const std::vector<int>& values) {
  std::vector<DensityRow> rows;
  if (values.empty()) return rows;
  const FrequencyTable t = frequency_table(values);
  for (const auto& [v, c] : t.counts) rows.push_back({v, c, t.percent.at(v)});
  return rows;
}

BinaryMask mask_from_image(const ColorImage& img) {
  BinaryMask mask(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const Rgb c = img(x, y);
      mask(x, y) = (c.r | c.g | c.b) != 0 ? 1 : 0;
    }
  }
  return mask;
}

}  // namespace

PipelineConfig parse_config(const std::string& text, const PipelineConfig& base) {
  PipelineConfig cfg = base;
  for (const auto& [key, value] : parse_key_values(text)) {
    if (key == "channel") cfg.channel = parse_channel(value);
    else if (key == "threshold") cfg.threshold = parse_threshold_mode(value);
    else if (key == "threshold_window") cfg.threshold_window = to_int(key, value);
    else if (key == "threshold_offset") cfg.threshold_offset = to_double(key, value);
    else if (key == "cleanup_radius") cfg.cleanup_radius = to_int(key, value);
    else if (key == "se_radius") cfg.se_radius = to_int(key, value);
    else if (key == "tau") cfg.tau = to_double(key, value);
    else if (key == "codec") cfg.codec = parse_codec(value);
    else if (key == "quality") cfg.quality = to_int(key, value);
    else if (key == "connectivity") {
      const int c = to_int(key, value);
      if (c != 4 && c != 8) throw Error(ErrorKind::kParameter, "connectivity must be 4 or 8");
      cfg.connectivity = static_cast<Connectivity>(c);
    } else if (key == "mask_input") cfg.mask_input = to_bool(key, value);
    else if (key == "out_dir") cfg.out_dir = value;
    else throw Error(ErrorKind::kParameter, "unknown config key: " + key);
  }
  cfg.validate();
  return cfg;
}

std::string format_config(const PipelineConfig& cfg) {
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
  line("channel", to_string(cfg.channel));
  line("threshold", to_string(cfg.threshold));
  line("threshold_window", std::to_string(cfg.threshold_window));
  line("threshold_offset", format_number(cfg.threshold_offset));
  line("cleanup_radius", std::to_string(cfg.cleanup_radius));
  line("se_radius", std::to_string(cfg.se_radius));
  line("tau", format_number(cfg.tau));
  line("codec", to_string(cfg.codec));
  line("quality", std::to_string(cfg.quality));
  line("connectivity", std::to_string(static_cast<int>(cfg.connectivity)));
  line("mask_input", cfg.mask_input ? "true" : "false");
  line("out_dir", cfg.out_dir.generic_string());
  return out;
}

MetricsRecord analyze_mask(const BinaryMask& mask, const PipelineConfig& cfg) {
  MetricsRecord rec;
  if (count_foreground(mask) == 0) {
    rec.status = FrameStatus::kNoRoi;
    rec.message = "no foreground region";
    return rec;
  }
  rec.zeta = normalized_coverage(mask);
  rec.z = compressibility(mask, cfg.codec, cfg.quality);
  rec.histogram = mr_histogram(mask);
  rec.mr = morphological_richness(rec.histogram);
  rec.mr_entropy = mr_entropy(rec.histogram);

  const SkeletonResult sk = skeletonize(mask, {cfg.se_radius, cfg.tau});
  if (sk.skeleton.tau_exceeds_boundary) rec.message = "tau exceeds the boundary length";
  const DropletGraph g = build_graph(sk.skeleton, sk.critical);
  rec.stats = graph_stats(g);
  rec.critical_points = node_points(g);
  const Triangulation tri = delaunay(rec.critical_points);
  rec.adjacency_entropy = adjacency_entropy(tri);
  rec.triangulation_degenerate = tri.degenerate;
  return rec;
}

MetricsRecord analyze_frame(const fs::path& path, const PipelineConfig& cfg) {
  MetricsRecord rec;
  rec.file = path.filename().generic_string();
  try {
    const auto bytes = read_file(path);
    rec.hash = sha256_hex(bytes);
    const ColorImage img = decode_image(bytes);
    if (img.width() < 3 || img.height() < 3) throw Error(ErrorKind::kDecode, "image smaller than 3x3");

    BinaryMask roi;
    if (cfg.mask_input) {
      roi = mask_from_image(img);
    } else {
      const GrayImage channel = extract_channel(rgb_to_hsv(img), cfg.channel);
      const bool fits = cfg.threshold_window <= std::min(img.width(), img.height());
      const BinaryMask fg = cfg.threshold == ThresholdMode::kLocal && fits
                                ? adaptive_threshold(channel, cfg.threshold_window, cfg.threshold_offset)
                                : otsu_threshold(channel);
      const auto regions = label_regions(fg, cfg.connectivity);
      if (regions.empty()) {
        rec.status = FrameStatus::kNoRoi;
        rec.message = "no foreground region";
        return rec;
      }
      roi = region_mask(select_roi(regions), img.width(), img.height());
      if (cfg.cleanup_radius > 0) roi = morphological_close_open(roi, cfg.cleanup_radius);
    }
    MetricsRecord metrics = analyze_mask(roi, cfg);
    metrics.file = rec.file;
    metrics.hash = rec.hash;
    return metrics;
  } catch (const Error& e) {
    rec.status = e.kind() == ErrorKind::kNoRoi ? FrameStatus::kNoRoi : FrameStatus::kError;
    rec.message = e.what();
  } catch (const std::exception& e) {
    rec.status = FrameStatus::kError;
    rec.message = e.what();
  }
  return rec;
}

std::vector<FrameSource> collect_frames(const fs::path& root) {
  std::error_code ec;
  if (fs::is_regular_file(root, ec)) return {{"", root, root.filename().generic_string()}};
  if (!fs::is_directory(root, ec)) throw Error(ErrorKind::kIo, "no such file or directory: " + root.string());

  std::vector<FrameSource> frames;
  std::vector<fs::path> entries;
  for (const auto& entry : fs::directory_iterator(root)) entries.push_back(entry.path());
  std::sort(entries.begin(), entries.end());
  for (const fs::path& p : entries) {
    if (fs::is_regular_file(p) && is_image_name(p)) {
      frames.push_back({"", p, p.filename().generic_string()});
    } else if (fs::is_directory(p)) {
      const std::string group = p.filename().generic_string();
      std::vector<fs::path> inner;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && is_image_name(entry.path())) inner.push_back(entry.path());
      }
      std::sort(inner.begin(), inner.end());
      for (const fs::path& q : inner) frames.push_back({group, q, group + "/" + q.filename().generic_string()});
    }
  }
  std::stable_sort(frames.begin(), frames.end(), [](const FrameSource& a, const FrameSource& b) {
    return a.group < b.group;
  });
  return frames;
}

SequenceSummary summarize_group(const std::string& name, const std::vector<MetricsRecord>& frames) {
  SequenceSummary s;
  s.name = name;
  std::vector<MrHistogram> hists;
  std::vector<double> adjacency;
  std::vector<int> ds, ns, leaves;
  std::vector<GraphStats> stats;
  for (const MetricsRecord& r : frames) {
    if (r.status != FrameStatus::kOk) continue;
    s.frames.push_back(r.frame);
    s.entropy_series.push_back(r.mr_entropy);
    hists.push_back(r.histogram);
    adjacency.push_back(r.adjacency_entropy);
    ds.push_back(r.stats.d);
    ns.push_back(r.stats.n);
    stats.push_back(r.stats);
  }
  if (s.frames.empty()) return s;

  if (s.entropy_series.size() >= 2) {
    s.spectrum = power_spectrum(s.entropy_series);
    s.dominating_frequency = dominating_frequency(s.spectrum);
    s.mr_distances = mr_distance_matrix(hists);
  } else {
    s.mr_distances = Matrix{{0.0}};
  }
  s.st = st_stats(adjacency);
  s.d_density = density(ds);
  s.n_density = density(ns);

  const BranchHistogram bh = branch_histogram(stats);
  for (const auto& [v, c] : bh.leaves.counts) s.leaves_histogram.push_back({v, c, bh.leaves.percent.at(v)});
  for (const auto& [r, c] : bh.bn_counts) s.bn_histogram.push_back({r, c, bh.bn_percent.at(r)});
  if (bh.bn_undefined > 0) s.bn_histogram.push_back({std::nullopt, bh.bn_undefined, bh.bn_undefined_percent});
  return s;
}

Report analyze_sequence(const fs::path& root, const PipelineConfig& cfg) {
  cfg.validate();
  const auto sources = collect_frames(root);
  if (sources.empty()) throw Error(ErrorKind::kEmptyInput, "no image frames under " + root.string());

  Report report;
  report.config = cfg;
  bool any_decoded = false;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    MetricsRecord rec = analyze_frame(sources[i].path, cfg);
    rec.frame = static_cast<int>(i);
    rec.group = sources[i].group;
    rec.file = sources[i].relative;
    if (rec.status == FrameStatus::kError) {
      report.errors.push_back(rec.file + ": " + rec.message);
    } else {
      any_decoded = true;
    }
    report.frames.push_back(std::move(rec));
  }
  if (!any_decoded) throw Error(ErrorKind::kEmptyInput, "no frame could be decoded");

  std::map<std::string, std::vector<MetricsRecord>> by_group;
  for (const MetricsRecord& r : report.frames) by_group[r.group].push_back(r);
  for (const auto& [name, records] : by_group) report.groups.push_back(summarize_group(name, records));
  return report;
}

}  // namespace dropgraph
