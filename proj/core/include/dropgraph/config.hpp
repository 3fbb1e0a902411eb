#pragma once

#include <map>
#include <string>

namespace dropgraph {

/// `key = value` lines; `#` starts a comment, blank lines are skipped.
/// Later keys override earlier ones. Throws kParameter on a line without `=`.
std::map<std::string, std::string> parse_key_values(const std::string& text);

}  // namespace dropgraph
