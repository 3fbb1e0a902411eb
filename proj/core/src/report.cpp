#include "dropgraph/report.hpp"

#include <charconv>
#include <fstream>

#include "dropgraph/error.hpp"

namespace dropgraph {

namespace fs = std::filesystem;
using nlohmann::json;

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw Error(ErrorKind::kParameter, "unknown report format: " + name);
}

std::string format_number(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {

FrameStatus parse_status(const std::string& s) {
  if (s == "ok") return FrameStatus::kOk;
  if (s == "no_roi") return FrameStatus::kNoRoi;
  if (s == "error") return FrameStatus::kError;
  throw Error(ErrorKind::kParameter, "unknown frame status: " + s);
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json config_json(const PipelineConfig& c) {
  return {{"channel", to_string(c.channel)},
          {"threshold", to_string(c.threshold)},
          {"threshold_window", c.threshold_window},
          {"threshold_offset", c.threshold_offset},
          {"cleanup_radius", c.cleanup_radius},
          {"se_radius", c.se_radius},
          {"tau", c.tau},
          {"codec", to_string(c.codec)},
          {"quality", c.quality},
          {"connectivity", static_cast<int>(c.connectivity)},
          {"mask_input", c.mask_input},
          {"out_dir", c.out_dir.generic_string()}};
}

PipelineConfig config_from_json(const json& j) {
  PipelineConfig c;
  c.channel = parse_channel(j.at("channel").get<std::string>());
  c.threshold = parse_threshold_mode(j.at("threshold").get<std::string>());
  c.threshold_window = j.at("threshold_window").get<int>();
  c.threshold_offset = j.at("threshold_offset").get<double>();
  c.cleanup_radius = j.at("cleanup_radius").get<int>();
  c.se_radius = j.at("se_radius").get<int>();
  c.tau = j.at("tau").get<double>();
  c.codec = parse_codec(j.at("codec").get<std::string>());
  c.quality = j.at("quality").get<int>();
  c.connectivity = static_cast<Connectivity>(j.at("connectivity").get<int>());
  c.mask_input = j.at("mask_input").get<bool>();
  c.out_dir = j.at("out_dir").get<std::string>();
  return c;
}

json encoders_json() {
  const PngSettings png;
  const JpegSettings jpeg;
  return {{"png", {{"bit_depth", 8}, {"color", "gray"}, {"compression_level", png.compression_level},
                   {"filter", png.filter}}},
          {"jpeg", {{"quality", jpeg.quality}, {"baseline", jpeg.baseline}, {"sampling", "4:4:4"}}}};
}

json frame_json(const MetricsRecord& r) {
  json hist = json::array();
  for (std::size_t code = 0; code < r.histogram.counts.size(); ++code) {
    if (r.histogram.counts[code] > 0) hist.push_back({code, r.histogram.counts[code]});
  }
  json cps = json::array();
  for (const Pixel& p : r.critical_points) cps.push_back({p.x, p.y});
  return {{"frame", r.frame},
          {"group", r.group},
          {"file", r.file},
          {"hash", r.hash},
          {"status", to_string(r.status)},
          {"message", r.message},
          {"zeta", r.zeta},
          {"z", r.z},
          {"mr", r.mr},
          {"mr_entropy", r.mr_entropy},
          {"d", r.stats.d},
          {"n", r.stats.n},
          {"B", r.stats.leaves},
          {"N", r.stats.internal},
          {"bn_ratio", optional_number(r.stats.bn_ratio)},
          {"adjacency_entropy", r.adjacency_entropy},
          {"triangulation_degenerate", r.triangulation_degenerate},
          {"critical_points", cps},
          {"mr_histogram", {{"total", r.histogram.total}, {"bins", hist}}}};
}

MetricsRecord frame_from_json(const json& j) {
  MetricsRecord r;
  r.frame = j.at("frame").get<int>();
  r.group = j.at("group").get<std::string>();
  r.file = j.at("file").get<std::string>();
  r.hash = j.at("hash").get<std::string>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.message = j.at("message").get<std::string>();
  r.zeta = j.at("zeta").get<double>();
  r.z = j.at("z").get<std::size_t>();
  r.mr = j.at("mr").get<double>();
  r.mr_entropy = j.at("mr_entropy").get<double>();
  r.stats.d = j.at("d").get<int>();
  r.stats.n = j.at("n").get<int>();
  r.stats.leaves = j.at("B").get<int>();
  r.stats.internal = j.at("N").get<int>();
  r.stats.bn_ratio = read_optional(j.at("bn_ratio"));
  r.adjacency_entropy = j.at("adjacency_entropy").get<double>();
  r.triangulation_degenerate = j.at("triangulation_degenerate").get<bool>();
  for (const json& p : j.at("critical_points")) r.critical_points.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  const json& h = j.at("mr_histogram");
  r.histogram.total = h.at("total").get<std::uint64_t>();
  for (const json& bin : h.at("bins")) {
    r.histogram.counts.at(bin.at(0).get<std::size_t>()) = bin.at(1).get<std::uint64_t>();
  }
  return r;
}

json density_json(const std::vector<DensityRow>& rows) {
  json out = json::array();
  for (const DensityRow& r : rows) out.push_back({{"value", r.value}, {"count", r.count}, {"percent", r.percent}});
  return out;
}

std::vector<DensityRow> density_from_json(const json& j) {
  std::vector<DensityRow> rows;
  for (const json& r : j) {
    rows.push_back({r.at("value").get<int>(), r.at("count").get<std::size_t>(), r.at("percent").get<double>()});
  }
  return rows;
}

json group_json(const SequenceSummary& s) {
  json spectrum = json::array();
  for (const SpectrumBin& b : s.spectrum) spectrum.push_back({{"bin", b.bin}, {"power", b.power}});
  json bn = json::array();
  for (const RatioRow& r : s.bn_histogram) {
    bn.push_back({{"ratio", optional_number(r.ratio)}, {"count", r.count}, {"percent", r.percent}});
  }
  json st = nullptr;
  if (s.st) st = {{"max", s.st->max}, {"min", s.st->min}, {"mean", s.st->mean}, {"std", s.st->std}};
  return {{"name", s.name},
          {"frames", s.frames},
          {"entropy_series", s.entropy_series},
          {"spectrum", spectrum},
          {"dominating_frequency", s.dominating_frequency ? json(*s.dominating_frequency) : json(nullptr)},
          {"mr_distances", s.mr_distances},
          {"st", st},
          {"d_density", density_json(s.d_density)},
          {"n_density", density_json(s.n_density)},
          {"b_histogram", density_json(s.leaves_histogram)},
          {"bn_histogram", bn}};
}

SequenceSummary group_from_json(const json& j) {
  SequenceSummary s;
  s.name = j.at("name").get<std::string>();
  s.frames = j.at("frames").get<std::vector<int>>();
  s.entropy_series = j.at("entropy_series").get<std::vector<double>>();
  for (const json& b : j.at("spectrum")) s.spectrum.push_back({b.at("bin").get<int>(), b.at("power").get<double>()});
  if (!j.at("dominating_frequency").is_null()) s.dominating_frequency = j.at("dominating_frequency").get<int>();
  s.mr_distances = j.at("mr_distances").get<Matrix>();
  if (const json& st = j.at("st"); !st.is_null()) {
    s.st = StSet{st.at("max").get<double>(), st.at("min").get<double>(), st.at("mean").get<double>(),
                 st.at("std").get<double>()};
  }
  s.d_density = density_from_json(j.at("d_density"));
  s.n_density = density_from_json(j.at("n_density"));
  s.leaves_histogram = density_from_json(j.at("b_histogram"));
  for (const json& r : j.at("bn_histogram")) {
    s.bn_histogram.push_back({read_optional(r.at("ratio")), r.at("count").get<std::size_t>(),
                              r.at("percent").get<double>()});
  }
  return s;
}

std::string group_label(const std::string& name) { return name.empty() ? "sequence" : name; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Writer {
  fs::path dir;
  std::vector<fs::path> written;
  json listing = json::array();

  void put(const std::string& name, const std::string& body) {
    const fs::path path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
    out << body;
    out.close();
    if (!out) throw Error(ErrorKind::kIo, "write failed: " + path.string());
    const std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(body.data()), body.size());
    listing.push_back({{"name", name}, {"bytes", body.size()}, {"sha256", sha256_hex(bytes)}});
    written.push_back(path);
  }
};

void write_csv_tables(const Report& report, Writer& w) {
  w.put("metrics.csv", metrics_csv(report));

  std::string adjacency = "frame,group,critical_points,degenerate,adjacency_entropy\n";
  for (const MetricsRecord& r : report.frames) {
    adjacency += std::to_string(r.frame) + "," + csv_field(r.group) + ",";
    if (r.status == FrameStatus::kOk) {
      adjacency += std::to_string(r.critical_points.size()) + "," +
                   (r.triangulation_degenerate ? "1" : "0") + "," + format_number(r.adjacency_entropy);
    } else {
      adjacency += ",,";
    }
    adjacency += "\n";
  }
  w.put("adjacency_entropy.csv", adjacency);

  std::string b_hist = "group,B,count,percent\n";
  std::string bn_hist = "group,bn_ratio,count,percent\n";
  std::string d_density = "group,d,count,percent\n";
  std::string n_density = "group,n,count,percent\n";
  std::string df = "group,frames,dominating_frequency\n";
  std::string st = "group,max,min,mean,std\n";
  auto rows = [](std::string& out, const std::string& g, const std::vector<DensityRow>& table) {
    for (const DensityRow& r : table) {
      out += g + "," + std::to_string(r.value) + "," + std::to_string(r.count) + "," + format_number(r.percent) + "\n";
    }
  };
  for (const SequenceSummary& s : report.groups) {
    const std::string g = csv_field(group_label(s.name));
    rows(b_hist, g, s.leaves_histogram);
    rows(d_density, g, s.d_density);
    rows(n_density, g, s.n_density);
    for (const RatioRow& r : s.bn_histogram) {
      bn_hist += g + "," + (r.ratio ? format_number(*r.ratio) : std::string("undefined")) + "," +
                 std::to_string(r.count) + "," + format_number(r.percent) + "\n";
    }
    df += g + "," + std::to_string(s.frames.size()) + "," +
          (s.dominating_frequency ? std::to_string(*s.dominating_frequency) : std::string("none")) + "\n";
    if (s.st) {
      st += g + "," + format_number(s.st->max) + "," + format_number(s.st->min) + "," +
            format_number(s.st->mean) + "," + format_number(s.st->std) + "\n";
    }

    const std::string label = group_label(s.name);
    std::string series = "frame,mr_entropy\n";
    for (std::size_t i = 0; i < s.frames.size(); ++i) {
      series += std::to_string(s.frames[i]) + "," + format_number(s.entropy_series[i]) + "\n";
    }
    w.put("entropy_series." + label + ".csv", series);

    std::string spectrum = "bin,power\n";
    for (const SpectrumBin& b : s.spectrum) spectrum += std::to_string(b.bin) + "," + format_number(b.power) + "\n";
    w.put("spectrum." + label + ".csv", spectrum);

    std::string matrix = "frame";
    for (int f : s.frames) matrix += "," + std::to_string(f);
    matrix += "\n";
    for (std::size_t i = 0; i < s.mr_distances.size(); ++i) {
      matrix += std::to_string(s.frames[i]);
      for (double v : s.mr_distances[i]) matrix += "," + format_number(v);
      matrix += "\n";
    }
    w.put("mr_distance." + label + ".csv", matrix);
  }
  w.put("b_histogram.csv", b_hist);
  w.put("bn_histogram.csv", bn_hist);
  w.put("d_density.csv", d_density);
  w.put("n_density.csv", n_density);
  w.put("dominating_frequency.csv", df);
  w.put("st_sets.csv", st);
}

}  // namespace

json to_json(const Report& report) {
  json frames = json::array();
  for (const MetricsRecord& r : report.frames) frames.push_back(frame_json(r));
  json groups = json::array();
  for (const SequenceSummary& s : report.groups) groups.push_back(group_json(s));
  return {{"config", config_json(report.config)},
          {"encoders", encoders_json()},
          {"frames", frames},
          {"groups", groups},
          {"errors", report.errors}};
}

Report report_from_json(const json& j) {
  Report report;
  report.config = config_from_json(j.at("config"));
  for (const json& f : j.at("frames")) report.frames.push_back(frame_from_json(f));
  for (const json& g : j.at("groups")) report.groups.push_back(group_from_json(g));
  report.errors = j.at("errors").get<std::vector<std::string>>();
  return report;
}

std::string metrics_csv(const Report& report) {
  std::string out = "frame,file,hash,zeta,z,mr,mr_entropy,d,n,B,N,bn_ratio\n";
  for (const MetricsRecord& r : report.frames) {
    out += std::to_string(r.frame) + "," + csv_field(r.file) + "," + r.hash + ",";
    if (r.status == FrameStatus::kOk) {
      out += format_number(r.zeta) + "," + std::to_string(r.z) + "," + format_number(r.mr) + "," +
             format_number(r.mr_entropy) + "," + std::to_string(r.stats.d) + "," + std::to_string(r.stats.n) +
             "," + std::to_string(r.stats.leaves) + "," + std::to_string(r.stats.internal) + "," +
             (r.stats.bn_ratio ? format_number(*r.stats.bn_ratio) : std::string());
    } else {
      out += ",,,,,,,,";
    }
    out += "\n";
  }
  return out;
}

std::vector<fs::path> emit_report(const Report& report, const fs::path& dir, ReportFormat format) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw Error(ErrorKind::kIo, "cannot create output directory " + dir.string());
  // A stale manifest must never describe a half-written report.
  fs::remove(dir / "manifest.json", ec);

  // Outputs name their own directory as ".", so reruns into different
  // destinations stay byte-identical.
  Report local = report;
  local.config.out_dir = ".";
  Writer w{dir, {}, json::array()};
  w.put("config.txt", format_config(local.config));
  if (format == ReportFormat::kJson) {
    w.put("report.json", to_json(local).dump(2) + "\n");
  } else {
    write_csv_tables(report, w);
  }

  json manifest = {{"format", format == ReportFormat::kJson ? "json" : "csv"},
                   {"frames", report.frames.size()},
                   {"groups", report.groups.size()},
                   {"errors", report.errors},
                   {"encoders", encoders_json()},
                   {"config", config_json(local.config)},
                   {"files", w.listing}};
  w.put("manifest.json", manifest.dump(2) + "\n");
  return w.written;
}

}  // namespace dropgraph
