#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dropgraph/graphs.hpp"
#include "dropgraph/image.hpp"

namespace dropgraph {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// A capsule between two nodes of a component.
struct ArmSegment {
  int from = 0;
  int to = 0;
  double width = 3.0;  // pixels, >= 3
  friend bool operator==(const ArmSegment&, const ArmSegment&) = default;
};

/// One connected branching structure: a tree of capsules over its nodes.
struct ComponentSpec {
  std::vector<Point2> nodes;
  std::vector<ArmSegment> arms;
  friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

struct BranchSpec {
  std::uint64_t seed = 0;
  int width = 256;
  int height = 256;
  int margin = 4;  // clearance to the canvas edge, at least the SE radius
  std::vector<ComponentSpec> components;
  friend bool operator==(const BranchSpec&, const BranchSpec&) = default;
};

/// Star: one junction at `center` with arms at the given angles (radians)
/// and lengths. A single arm yields a plain capsule.
ComponentSpec star_component(Point2 center, const std::vector<double>& angles,
                             const std::vector<double>& lengths,
                             const std::vector<double>& widths);

/// Expected d, B, N of the arm trees (degree counted over arm segments).
GraphStats expected_stats(const BranchSpec& spec);

/// Rasterised union of capsules plus the construction ground truth.
/// Throws kSpec when widths are below 3, arms leave the margin, components
/// touch, or an arm tree is not a tree.
std::pair<BinaryMask, GraphStats> generate_mask(const BranchSpec& spec);

/// Flips each pixel with probability `noise_rate` from a seeded stream.
/// Throws kParameter unless 0 <= noise_rate <= 0.05.
BinaryMask perturb_mask(const BinaryMask& mask, double noise_rate, std::uint64_t seed);

struct CorpusOptions {
  int min_components = 1;
  int max_components = 4;
  int min_arms = 2;
  int max_arms = 8;
  double min_width = 3.0;
  double max_width = 9.0;
  double min_length = 40.0;  // 4 * default tau
  double max_length = 56.0;
  /// Require every pair of arm tips to be farther apart than the longest arm
  /// (stars whose MST matches the arms).
  bool separated_tips = false;
};

/// Deterministic random star corpus spec for a seed.
BranchSpec random_spec(std::uint64_t seed, const CorpusOptions& options = {});

std::vector<BranchSpec> standard_corpus(std::size_t count, std::uint64_t seed,
                                        const CorpusOptions& options = {});

/// Flat `key = value` text; round-trips through parse_spec.
std::string format_spec(const BranchSpec& spec);
BranchSpec parse_spec(const std::string& text);

}  // namespace dropgraph
