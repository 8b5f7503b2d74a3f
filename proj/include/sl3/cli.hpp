#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl3 {

enum class OutputFormat : std::uint8_t { Text, Json };

struct RunConfig {
  /// validate, bracket, reduce, classify, enum, invdim, homdim, certify,
  /// keylemma or foam.
  std::string command;
  /// certify: indec | noniso. foam: eval.
  std::string mode;
  /// Files, or the sign sequence for enum and invdim.
  std::vector<std::string> inputs;
  OutputFormat format = OutputFormat::Text;
  std::optional<int> budget;
  int max_len = 0;
  int jobs = 1;
  std::optional<std::uint64_t> seed;  // bracket: random reduction order; enum: search order
  bool superficial = false;
};

/// Bad command line: exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs one command. Returns 0 on success, 1 on a domain error (reported as
/// CODE: message), 2 on a usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sl3
