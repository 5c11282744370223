#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace wqo::cli {

enum class Format { Json, Text };

struct RunConfig {
  std::string command;
  std::string qo_spec;                        // file path, inline JSON, or a built-in name
  std::map<std::string, std::string> inputs;  // named JSON documents (u, v, x, prefix, array, ...)
  std::uint64_t trunc = 12;
  std::uint64_t seed = 0;
  std::string output;  // empty: stdout
  Format format = Format::Json;
  std::map<std::string, std::int64_t> ints;  // n, k, target, bound, depth, limit, max-size, width, count
  std::set<std::string> flags;               // weak, starred
};

// 0: true / verified, 1: false / refuted (with witness), 2: input error or bound too small.
struct RunResult {
  int exit_code = 0;
  std::string report;
};

RunResult run(const RunConfig& cfg);

// "@path" reads the file; anything else is returned unchanged.
std::string resolve_argument(const std::string& arg);

}  // namespace wqo::cli
