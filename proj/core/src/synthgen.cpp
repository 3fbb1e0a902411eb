#include "dropgraph/synthgen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "dropgraph/config.hpp"
#include "dropgraph/error.hpp"

namespace dropgraph {

namespace {

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_draw(rng); }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const double vx = b.x - a.x;
  const double vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0.0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = p.x - (a.x + t * vx);
  const double dy = p.y - (a.y + t * vy);
  return std::sqrt(dx * dx + dy * dy);
}

std::vector<int> arm_degrees(const ComponentSpec& c) {
  std::vector<int> deg(c.nodes.size(), 0);
  for (const ArmSegment& a : c.arms) {
    ++deg[a.from];
    ++deg[a.to];
  }
  return deg;
}

void check_component(const ComponentSpec& c, const BranchSpec& spec, std::size_t index) {
  const std::string where = "component " + std::to_string(index) + ": ";
  if (c.arms.empty()) throw Error(ErrorKind::kSpec, where + "no arms");
  if (c.arms.size() + 1 != c.nodes.size()) throw Error(ErrorKind::kSpec, where + "arms do not form a tree");
  std::vector<int> parent(c.nodes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const ArmSegment& a : c.arms) {
    const int n = static_cast<int>(c.nodes.size());
    if (a.from < 0 || a.to < 0 || a.from >= n || a.to >= n || a.from == a.to) {
      throw Error(ErrorKind::kSpec, where + "arm references an invalid node");
    }
    if (a.width < 3.0) throw Error(ErrorKind::kSpec, where + "arm width below 3");
    const int ra = find(a.from);
    const int rb = find(a.to);
    if (ra == rb) throw Error(ErrorKind::kSpec, where + "arms contain a cycle");
    parent[ra] = rb;
    const double r = a.width / 2.0;
    for (const Point2& p : {c.nodes[a.from], c.nodes[a.to]}) {
      if (p.x - r < spec.margin || p.y - r < spec.margin || p.x + r > spec.width - 1 - spec.margin ||
          p.y + r > spec.height - 1 - spec.margin) {
        throw Error(ErrorKind::kSpec, where + "arm leaves the canvas margin");
      }
    }
  }
}

void append_number(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kSpec, "not a number: '" + s + "'");
  }
  return v;
}

template <typename Int>
Int parse_int(const std::string& s) {
  Int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kSpec, "not an integer: '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

}  // namespace

ComponentSpec star_component(Point2 center, const std::vector<double>& angles,
                             const std::vector<double>& lengths, const std::vector<double>& widths) {
  if (angles.empty() || angles.size() != lengths.size() || angles.size() != widths.size()) {
    throw Error(ErrorKind::kSpec, "star arms need matching angle, length and width lists");
  }
  ComponentSpec c;
  c.nodes.push_back(center);
  for (std::size_t i = 0; i < angles.size(); ++i) {
    c.nodes.push_back({center.x + lengths[i] * std::cos(angles[i]),
                       center.y + lengths[i] * std::sin(angles[i])});
    c.arms.push_back({0, static_cast<int>(i + 1), widths[i]});
  }
  return c;
}

GraphStats expected_stats(const BranchSpec& spec) {
  GraphStats s;
  s.d = static_cast<int>(spec.components.size());
  for (const ComponentSpec& c : spec.components) {
    for (int deg : arm_degrees(c)) {
      if (deg == 1) ++s.leaves;
      if (deg >= 3) ++s.internal;
    }
  }
  s.n = s.leaves + s.internal;
  if (s.internal > 0) s.bn_ratio = static_cast<double>(s.leaves) / s.internal;
  return s;
}

std::pair<BinaryMask, GraphStats> generate_mask(const BranchSpec& spec) {
  if (spec.width < 8 || spec.height < 8) throw Error(ErrorKind::kSpec, "canvas too small");
  if (spec.margin < 0) throw Error(ErrorKind::kSpec, "negative margin");
  if (spec.components.empty()) throw Error(ErrorKind::kSpec, "spec has no components");

  BinaryMask mask(spec.width, spec.height);
  Raster<std::int32_t> owner(spec.width, spec.height, -1);
  for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
    const ComponentSpec& c = spec.components[ci];
    check_component(c, spec, ci);
    for (const ArmSegment& a : c.arms) {
      const Point2 p = c.nodes[a.from];
      const Point2 q = c.nodes[a.to];
      const double r = a.width / 2.0;
      const int x0 = std::max(0, static_cast<int>(std::floor(std::min(p.x, q.x) - r)));
      const int x1 = std::min(spec.width - 1, static_cast<int>(std::ceil(std::max(p.x, q.x) + r)));
      const int y0 = std::max(0, static_cast<int>(std::floor(std::min(p.y, q.y) - r)));
      const int y1 = std::min(spec.height - 1, static_cast<int>(std::ceil(std::max(p.y, q.y) + r)));
      for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
          if (segment_distance({double(x), double(y)}, p, q) > r) continue;
          const int prior = owner(x, y);
          if (prior >= 0 && prior != static_cast<int>(ci)) {
            throw Error(ErrorKind::kSpec, "components overlap");
          }
          owner(x, y) = static_cast<std::int32_t>(ci);
          mask(x, y) = 1;
        }
      }
    }
  }
  // Sampling capsules at pixel centres can leave enclosed background pockets
  // between arms; the continuous union is simply connected, so fill them.
  {
    Raster<std::uint8_t> outside(spec.width, spec.height);
    std::vector<Pixel> stack;
    auto seed = [&](int x, int y) {
      if (!mask(x, y) && !outside(x, y)) {
        outside(x, y) = 1;
        stack.push_back({x, y});
      }
    };
    for (int x = 0; x < spec.width; ++x) {
      seed(x, 0);
      seed(x, spec.height - 1);
    }
    for (int y = 0; y < spec.height; ++y) {
      seed(0, y);
      seed(spec.width - 1, y);
    }
    while (!stack.empty()) {
      const Pixel p = stack.back();
      stack.pop_back();
      for (const Pixel o : {Pixel{1, 0}, Pixel{-1, 0}, Pixel{0, 1}, Pixel{0, -1}}) {
        const Pixel q{p.x + o.x, p.y + o.y};
        if (mask.contains(q) && !mask[q] && !outside[q]) {
          outside[q] = 1;
          stack.push_back(q);
        }
      }
    }
    for (int y = 0; y < spec.height; ++y) {
      for (int x = 0; x < spec.width; ++x) {
        if (mask(x, y) || outside(x, y)) continue;
        mask(x, y) = 1;
        for (const Pixel o : {Pixel{1, 0}, Pixel{-1, 0}, Pixel{0, 1}, Pixel{0, -1}}) {
          const int nb = owner.at_or(x + o.x, y + o.y, -1);
          if (nb >= 0) owner(x, y) = nb;
        }
      }
    }
  }
  // Components must not touch, even diagonally.
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      const int o = owner(x, y);
      if (o < 0) continue;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int other = owner.at_or(x + dx, y + dy, -1);
          if (other >= 0 && other != o) throw Error(ErrorKind::kSpec, "components touch");
        }
      }
    }
  }
  return {std::move(mask), expected_stats(spec)};
}

BinaryMask perturb_mask(const BinaryMask& mask, double noise_rate, std::uint64_t seed) {
  if (!(noise_rate >= 0.0 && noise_rate <= 0.05)) {
    throw Error(ErrorKind::kParameter, "noise rate must lie in [0, 0.05]");
  }
  BinaryMask out = mask;
  std::mt19937_64 rng(seed);
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      if (unit_draw(rng) < noise_rate) out(x, y) = out(x, y) ? 0 : 1;
    }
  }
  return out;
}

BranchSpec random_spec(std::uint64_t seed, const CorpusOptions& options) {
  if (options.min_components < 1 || options.max_components < options.min_components ||
      options.min_arms < 1 || options.max_arms < options.min_arms || options.min_width < 3.0 ||
      options.max_width < options.min_width || options.min_length <= 0.0 ||
      options.max_length < options.min_length) {
    throw Error(ErrorKind::kParameter, "invalid corpus options");
  }
  std::mt19937_64 rng(seed);
  BranchSpec spec;
  spec.seed = seed;

  // Components sit in distinct cells of a square grid.
  const double reach = options.max_length + options.max_width / 2.0;
  const int cell = 2 * static_cast<int>(std::ceil(reach)) + 16;
  const int count = uniform_int(rng, options.min_components, options.max_components);
  const int columns = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(options.max_components))));
  const int rows = (options.max_components + columns - 1) / columns;
  spec.width = columns * cell;
  spec.height = rows * cell;

  std::vector<int> cells(static_cast<std::size_t>(columns * rows));
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<int>(i);
  for (std::size_t i = cells.size(); i > 1; --i) {
    std::swap(cells[i - 1], cells[rng() % i]);
  }

  for (int k = 0; k < count; ++k) {
    const int cx = cells[k] % columns;
    const int cy = cells[k] / columns;
    const double slack = cell / 2.0 - reach - 8.0;
    const Point2 center{cx * cell + cell / 2.0 + uniform(rng, -slack, slack),
                        cy * cell + cell / 2.0 + uniform(rng, -slack, slack)};

    int arms = uniform_int(rng, options.min_arms, options.max_arms);
    if (options.separated_tips) arms = std::min(arms, 5);
    const double sector = 2.0 * std::numbers::pi / arms;
    std::vector<double> angles(arms), lengths(arms), widths(arms);
    for (int attempt = 0;; ++attempt) {
      const double offset = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      for (int i = 0; i < arms; ++i) {
        angles[i] = offset + i * sector + uniform(rng, -0.2, 0.2) * sector;
        lengths[i] = uniform(rng, options.min_length, options.max_length);
        widths[i] = uniform(rng, options.min_width, options.max_width);
      }
      if (!options.separated_tips) break;
      const double longest = *std::max_element(lengths.begin(), lengths.end());
      bool separated = true;
      for (int i = 0; i < arms && separated; ++i) {
        for (int j = i + 1; j < arms && separated; ++j) {
          const double dx = lengths[i] * std::cos(angles[i]) - lengths[j] * std::cos(angles[j]);
          const double dy = lengths[i] * std::sin(angles[i]) - lengths[j] * std::sin(angles[j]);
          separated = std::hypot(dx, dy) > longest;
        }
      }
      if (separated) break;
      if (attempt > 1000) throw Error(ErrorKind::kSpec, "cannot separate arm tips");
    }
    spec.components.push_back(star_component(center, angles, lengths, widths));
  }
  return spec;
}

std::vector<BranchSpec> standard_corpus(std::size_t count, std::uint64_t seed,
                                        const CorpusOptions& options) {
  std::vector<BranchSpec> corpus;
  corpus.reserve(count);
  std::mt19937_64 seeds(seed);
  for (std::size_t i = 0; i < count; ++i) corpus.push_back(random_spec(seeds(), options));
  return corpus;
}

std::string format_spec(const BranchSpec& spec) {
  std::string out;
  out += "seed = " + std::to_string(spec.seed) + "\n";
  out += "width = " + std::to_string(spec.width) + "\n";
  out += "height = " + std::to_string(spec.height) + "\n";
  out += "margin = " + std::to_string(spec.margin) + "\n";
  out += "components = " + std::to_string(spec.components.size()) + "\n";
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const ComponentSpec& c = spec.components[i];
    const std::string prefix = "component." + std::to_string(i) + ".";
    out += prefix + "nodes = ";
    for (std::size_t n = 0; n < c.nodes.size(); ++n) {
      if (n) out += ';';
      append_number(out, c.nodes[n].x);
      out += ',';
      append_number(out, c.nodes[n].y);
    }
    out += "\n" + prefix + "arms = ";
    for (std::size_t a = 0; a < c.arms.size(); ++a) {
      if (a) out += ';';
      out += std::to_string(c.arms[a].from) + '-' + std::to_string(c.arms[a].to) + ':';
      append_number(out, c.arms[a].width);
    }
    out += "\n";
  }
  return out;
}

BranchSpec parse_spec(const std::string& text) {
  std::map<std::string, std::string> kv;
  try {
    kv = parse_key_values(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::kSpec, e.what());
  }
  auto take = [&](const std::string& key) -> std::string {
    const auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorKind::kSpec, "missing key: " + key);
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  BranchSpec spec;
  spec.seed = parse_int<std::uint64_t>(take("seed"));
  spec.width = parse_int<int>(take("width"));
  spec.height = parse_int<int>(take("height"));
  if (kv.contains("margin")) spec.margin = parse_int<int>(take("margin"));
  const auto count = parse_int<std::size_t>(take("components"));
  for (std::size_t i = 0; i < count; ++i) {
    const std::string prefix = "component." + std::to_string(i) + ".";
    ComponentSpec c;
    for (const std::string& node : split(take(prefix + "nodes"), ';')) {
      const auto xy = split(node, ',');
      if (xy.size() != 2) throw Error(ErrorKind::kSpec, "node needs x,y: '" + node + "'");
      c.nodes.push_back({parse_double(xy[0]), parse_double(xy[1])});
    }
    for (const std::string& arm : split(take(prefix + "arms"), ';')) {
      const auto dash = arm.find('-');
      const auto colon = arm.find(':');
      if (dash == std::string::npos || colon == std::string::npos || colon < dash) {
        throw Error(ErrorKind::kSpec, "arm needs from-to:width: '" + arm + "'");
      }
      c.arms.push_back({parse_int<int>(arm.substr(0, dash)),
                        parse_int<int>(arm.substr(dash + 1, colon - dash - 1)),
                        parse_double(arm.substr(colon + 1))});
    }
    spec.components.push_back(std::move(c));
  }
  if (!kv.empty()) throw Error(ErrorKind::kSpec, "unknown key: " + kv.begin()->first);
  return spec;
}

}  // namespace dropgraph
