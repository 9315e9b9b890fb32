#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polya::cli {

enum class Command { pmf, state, moments, qline, squeeze, limits, urn, verify };
enum class Format { csv, json };

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* to_string(Command c) noexcept;
std::optional<Command> parse_command(std::string_view name);

struct RunConfig {
  Command command = Command::pmf;
  std::vector<int> M;  // one value, except squeeze which accepts several
  std::optional<double> gamma;
  std::optional<double> eta;
  std::optional<int> points;
  Format format = Format::csv;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<double> lambda;
  std::optional<double> rho;
  std::optional<int> k;
  std::optional<std::string> kind;  // limits: bs | nbs
  std::optional<std::string> grid;  // verify: grid config path
};

/// Checks that each command gets the options it needs and nothing it
/// ignores. Throws UsageError.
void validate(const RunConfig& config);

}  // namespace polya::cli
