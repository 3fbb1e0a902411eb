#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dropgraph/pipeline.hpp"

namespace dropgraph {

enum class ReportFormat { kCsv, kJson };

ReportFormat parse_report_format(const std::string& name);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Shortest decimal string that parses back to the same double.
std::string format_number(double value);

/// metrics.csv body: header plus one row per frame.
std::string metrics_csv(const Report& report);

/// Writes the report files into `dir` (created if missing) and returns the
/// written paths. The manifest is written last, only after every other file
/// succeeded. Throws kIo when the destination is unwritable.
std::vector<std::filesystem::path> emit_report(const Report& report,
                                               const std::filesystem::path& dir,
                                               ReportFormat format);

}  // namespace dropgraph
