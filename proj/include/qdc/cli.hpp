#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qdc {

enum class OutputFormat { text, json, csv };

/// Exit codes of the qdc tool.
enum ExitCode { kExitPass = 0, kExitMathFailure = 1, kExitBadInput = 2 };

struct RunConfig {
  std::string subcommand;
  int n = 1;
  std::optional<int> k;
  std::optional<int> r;
  int max_degree = 2;
  int trials = 20;
  std::uint64_t seed = 1;
  std::optional<std::string> xi;
  OutputFormat format = OutputFormat::text;
  /// Form or QFunction JSON; "-" reads stdin.
  std::optional<std::string> input;
  std::string generator = "C";
  bool verify = false;
  bool report = false;
};

/// Parses argv-style arguments (without the program name). Returns the exit
/// code to use when parsing ends the run (help, bad flags).
struct ParsedArgs {
  std::optional<RunConfig> config;
  int exit_code = kExitPass;
};
ParsedArgs parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs one subcommand, writing the report to `out` and diagnostics to `err`.
int dispatch(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_args followed by dispatch.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qdc
