#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dropgraph/codec.hpp"
#include "dropgraph/complexity.hpp"
#include "dropgraph/graphs.hpp"
#include "dropgraph/segmentation.hpp"

namespace dropgraph {

enum class ThresholdMode { kLocal, kOtsu };

struct PipelineConfig {
  Channel channel = Channel::kSaturation;
  ThresholdMode threshold = ThresholdMode::kLocal;
  int threshold_window = 51;
  double threshold_offset = 0.02;
  int cleanup_radius = 2;  // close/open disk applied to the ROI
  int se_radius = 4;
  double tau = 10.0;
  Codec codec = Codec::kPng;
  int quality = 90;
  Connectivity connectivity = Connectivity::kEight;
  bool mask_input = false;  // treat frames as masks: nonzero gray -> foreground
  std::filesystem::path out_dir = "out";

  /// Throws kParameter when a value is outside its consumer's range.
  void validate() const;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

const char* to_string(Channel channel);
Channel parse_channel(const std::string& name);
const char* to_string(ThresholdMode mode);
ThresholdMode parse_threshold_mode(const std::string& name);

/// Flat key-value form; `format_config(parse_config(s))` is canonical.
PipelineConfig parse_config(const std::string& text,
                            const PipelineConfig& base = PipelineConfig{});
std::string format_config(const PipelineConfig& cfg);

enum class FrameStatus { kOk, kNoRoi, kError };

const char* to_string(FrameStatus status);

struct MetricsRecord {
  int frame = 0;
  std::string group;
  std::string file;  // path relative to the analysed root
  std::string hash;  // SHA-256 of the file bytes
  FrameStatus status = FrameStatus::kOk;
  std::string message;  // error text for failed frames

  double zeta = 0.0;
  std::size_t z = 0;
  double mr = 0.0;
  double mr_entropy = 0.0;
  GraphStats stats;
  double adjacency_entropy = 0.0;
  bool triangulation_degenerate = false;
  std::vector<Pixel> critical_points;
  MrHistogram histogram;

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

struct DensityRow {
  int value = 0;
  std::size_t count = 0;
  double percent = 0.0;
  friend bool operator==(const DensityRow&, const DensityRow&) = default;
};

struct RatioRow {
  std::optional<double> ratio;  // empty: undefined (no internal nodes)
  std::size_t count = 0;
  double percent = 0.0;
  friend bool operator==(const RatioRow&, const RatioRow&) = default;
};

/// Sequence-level artefacts for one group of time-ordered frames.
struct SequenceSummary {
  std::string name;
  std::vector<int> frames;  // frame ids of the ok frames, in order
  std::vector<double> entropy_series;
  std::vector<SpectrumBin> spectrum;
  std::optional<int> dominating_frequency;
  Matrix mr_distances;
  std::optional<StSet> st;  // over per-frame adjacency entropies
  std::vector<DensityRow> d_density;
  std::vector<DensityRow> n_density;
  std::vector<DensityRow> leaves_histogram;
  std::vector<RatioRow> bn_histogram;

  friend bool operator==(const SequenceSummary&, const SequenceSummary&) = default;
};

struct Report {
  PipelineConfig config;
  std::vector<MetricsRecord> frames;
  std::vector<SequenceSummary> groups;
  std::vector<std::string> errors;  // "file: message" per failed frame

  friend bool operator==(const Report&, const Report&) = default;
};

/// Decodes and analyses one image file. Decode failures and missing ROIs are
/// reported through `status`, never thrown.
MetricsRecord analyze_frame(const std::filesystem::path& path, const PipelineConfig& cfg);

/// Per-frame metrics of an already segmented mask.
MetricsRecord analyze_mask(const BinaryMask& mask, const PipelineConfig& cfg);

/// Frames of a file, a directory, or a directory of group subdirectories,
/// ordered by (group, filename).
struct FrameSource {
  std::string group;
  std::filesystem::path path;
  std::string relative;
};
std::vector<FrameSource> collect_frames(const std::filesystem::path& root);

/// Throws kEmptyInput when no frame decodes.
Report analyze_sequence(const std::filesystem::path& root, const PipelineConfig& cfg);

/// Sequence artefacts from finished frame records (frames of one group).
SequenceSummary summarize_group(const std::string& name,
                                const std::vector<MetricsRecord>& frames);

}  // namespace dropgraph
