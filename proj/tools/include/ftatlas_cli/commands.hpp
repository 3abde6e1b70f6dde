#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <ftatlas/serialize.hpp>

namespace ftatlas::cli {

inline constexpr std::size_t kMaxGroupOrder = 128;
inline constexpr std::int64_t kMaxNMax = 200;

enum class Format { kJson, kCsv, kText };

struct RunConfig {
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  Format format = Format::kJson;
  std::optional<std::string> out_path;
};

struct AnalyzeInput {
  std::optional<std::string> file;
  std::optional<std::string> builtin;
  BuiltinParams params;
  std::optional<bool> in_group;
  bool simply_connected = true;
};

Json cmd_analyze(const AnalyzeInput& input, const RunConfig& config);

struct FrameInput {
  std::optional<std::string> group_file;
  std::optional<std::string> family;
  std::size_t family_parameter = 0;
  std::optional<std::string> vector_file;
  /// Comma-separated numbers, "a/b" rationals or re:im pairs.
  std::optional<std::string> vector_inline;
  /// "all" or comma-separated element indices; an empty list is allowed
  /// and reported as EMPTY_SHIFT_SET.
  std::string shifts = "all";
};

Json cmd_frame(const FrameInput& input, const RunConfig& config);
Json cmd_heisenberg_demo(std::int64_t n, const RunConfig& config);
Json cmd_partition(const std::string& points_file, double s, const RunConfig& config);
Json cmd_amalgam_demo(const std::vector<double>& widths, std::optional<double> step, const RunConfig& config);
Json cmd_sopq(int p, int q, const RunConfig& config);
Json cmd_classify_example(const std::string& name, const BuiltinParams& params, const RunConfig& config);

/// Renders a report; CSV and text flatten nested values to path/value rows,
/// except tables (arrays of flat objects) under "rows", which become CSV
/// tables.
std::string render(const Json& report, Format format);

/// Full command line entry point. Returns the process exit code: 0 on
/// success, 1 for usage errors, 2 for library errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ftatlas::cli
