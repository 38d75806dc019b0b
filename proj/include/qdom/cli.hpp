#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdom::cli {

enum class Format { json, csv, text };

struct RunConfig {
  int order = 100;
  std::array<int, 3> bounds{10, 40, 40};
  int cap = 40;
  std::uint64_t seed = 1;
  int jobs = 1;
  Format format = Format::json;
  bool dump_series = false;
  bool dump_poly = false;
  bool timings = false;
};

inline constexpr const char* kOrderEnv = "QDOM_ORDER";

// Inclusive integer ranges, one per parameter: "1:4,1:4,2" (a bare value is a
// single point).
std::vector<std::pair<int, int>> parse_box(const std::string& text);

// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or
// resource error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdom::cli
