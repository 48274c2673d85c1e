#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ostro/core.hpp"

namespace ostro::cli {

enum class Subcommand { Enclose, Verify, Identity, Compare };
enum class OutputMode { Text, Json };

std::string_view to_string(Subcommand s) noexcept;

inline constexpr int kSchemaVersion = 1;

struct CliInvocation {
  Subcommand subcommand = Subcommand::Enclose;
  OutputMode output_mode = OutputMode::Text;

  std::string f;
  std::optional<std::array<double, 4>> rect;
  std::optional<std::array<double, 2>> point;  // default: midpoint
  std::optional<std::array<double, 2>> bounds;  // empty: auto
  std::array<int, 2> subdivide{1, 1};
  std::vector<double> lambdas;  // compare uses the first
  std::vector<std::string> rules;
  long trials = 1000;
  std::uint64_t seed = 42;
  int degree = 6;
  std::optional<double> tol;
  std::vector<std::string> expect_hold;
  std::optional<std::string> out_path;
  bool no_timestamp = false;
  QuadConfig quad{};
  int grid = 17;         // samples per axis for --bounds auto
  double pad_rel = 0.05;  // relative widening for --bounds auto
  int threads = 0;
};

/// Thrown by parse_args for --help and --version.
struct HelpRequested {
  std::string text;
};

/// argv without the program name. Throws Error(UsageError) naming the
/// offending flag; unknown flags are rejected.
CliInvocation parse_args(const std::vector<std::string>& args);

/// Runs a validated invocation and returns the exit code: 0 success,
/// 1 numerical failure, 2 input error, 3 expected-to-hold rule violated.
/// JSON mode writes exactly one document to `out`; diagnostics go to `err`.
int run(const CliInvocation& inv, std::ostream& out, std::ostream& err);

/// parse_args + run, with usage errors reported on `err` (exit 2) and
/// --help written to `out` (exit 0).
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit code for an error raised while running.
int exit_code_for(ErrorCode code) noexcept;

}  // namespace ostro::cli
