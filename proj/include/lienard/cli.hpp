#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lienard/params.hpp"
#include "lienard/report.hpp"

namespace lienard::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2 };

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "LIENARD_OUTPUT_DIR";

struct RunConfig {
  PhysicalParams phys;
  AmbiguityParams amb;
  unsigned n_max = 4;
  std::size_t y_points = 24000;
  std::optional<double> y_max;
  double h_p = 1e-3;
  std::vector<double> k_sequence{1e-1, 1e-2, 1e-3};
  std::string output;  // empty: stdout unless the env directory is set
  report::Format format = report::Format::csv;
};

/// Parses "1e-1,1e-2" style lists. Throws std::invalid_argument.
std::vector<double> parse_list(const std::string& text);

/// Reads a flat JSON object and turns it into "--key value" tokens (keys with
/// '_' mapped to '-'). Arrays become comma-joined values, true becomes a bare
/// flag. Throws std::invalid_argument on malformed input.
std::vector<std::string> config_tokens(const std::string& path);

/// argv[0] is the program name. Output goes to `out` when no file is
/// requested; the summary and diagnostics go to `err`.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run_command(int argc, const char* const* argv);

}  // namespace lienard::cli
