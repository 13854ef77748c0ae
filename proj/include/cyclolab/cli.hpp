#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace cyclo {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
  int digits = 15;
  unsigned jobs = 0;  ///< 0: available parallelism; CYCLOLAB_JOBS overrides
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> out_path;
  bool resume = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  ///< checked, and a claimed property does not hold
inline constexpr int kExitUsage = 2;   ///< bad arguments, or the check could not be carried out

/// Parses argv, runs one subcommand and returns the exit status.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclo
