#pragma once

// Command-line front end.  Every verb emits a deterministic artifact (JSON
// with sorted keys, CSV or plain text); JSON artifacts carry a schema header.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tqft::cli {

inline constexpr const char* kResultSchema = "tqftcert.result/1";

enum ExitCode : int { kSuccess = 0, kFailed = 1, kUsage = 2, kVacuous = 3 };

enum class Format { Json, Csv, Text };

struct Bounds {
  int max_color = 12;
  int max_strands = 24;
  int max_depth = 16;
};

struct RunConfig {
  /// Level p; empty means generic (transcendental A).
  std::optional<int> p;
  /// "qint", "theta", ..., "certify irr", "certify dense", "sweep", "replay".
  std::string verb;
  Format format = Format::Text;
  Bounds bounds;
  /// Artifact path; empty writes to the output stream.  Relative paths are
  /// resolved against $TQFTCERT_OUTPUT_DIR when it is set.
  std::string output;

  // Verb parameters.
  int i = 0;
  int g = 0, b = 0, n = 0;
  std::vector<int> colors;
  std::string edge;
  std::vector<int> pair;
  std::optional<int> color;
  bool dual = false;
  bool inverse = false;
  std::string input;
  std::string graph;
  std::string expr;
  std::string sweep_kind = "dim";
  int color_max = 2;
  bool sorted_only = false;
  int threads = 0;
};

/// Throws std::invalid_argument when the bounds or the mode do not fit the
/// verb.
void validate(const RunConfig& config);

/// Runs one verb; returns the process exit code.  Errors go to `err` with
/// exit code 2.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tqft::cli
