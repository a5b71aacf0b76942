#ifndef FEKETE_CLI_HPP_
#define FEKETE_CLI_HPP_

#include "fekete/asym.hpp"
#include "fekete/precision.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fekete::cli {

enum class ExitCode : int { success = 0, verification_failure = 1, usage_error = 2 };

enum class Command { exact, coeffs, table, zeros, minimize, verify };

enum class Format { csv, json };

/// Invalid flags, ranges or parameter combinations.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Command command = Command::exact;
  std::string kind;              // command-specific; empty selects the default
  std::vector<int> degrees;      // values of n (or N)
  double p = 1;
  double q = 1;
  double a = -1;
  double b = 1;
  int order = 2;                 // M
  Precision precision = Precision::standard;
  Format format = Format::csv;
  std::optional<std::string> out_path;
  double tol = 1e-10;
  double slope_tol = 0.15;
};

/// "a..b" (inclusive, a <= b) or a comma list whose items may themselves be
/// ranges, e.g. "2..5,10,20". Throws UsageError on anything else.
std::vector<int> parse_range(const std::string& text);

/// Expansion kind from a CLI name; accepts the serialized names and the
/// short aliases lambda, P1, D, elliptic, interval, general_interval.
ExpansionKind parse_kind(const std::string& name);

/// Parses argv into a RunConfig. Throws UsageError.
RunConfig parse_args(int argc, const char* const* argv);

/// Executes a parsed configuration, writing to `out` (ignored when the
/// configuration names an output file). Returns the exit status.
ExitCode execute(const RunConfig& cfg, std::ostream& out);

/// Full entry point: parse, execute, report errors on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fekete::cli

#endif  // FEKETE_CLI_HPP_
