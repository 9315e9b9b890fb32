#pragma once

#include <ostream>

#include "polya/cli/config.hpp"

namespace polya::cli {

/// Runs a validated command. Output goes to `config.out` when set,
/// otherwise to `out`. Returns the exit code; library errors surface as
/// UsageError or IoError.
int run(const RunConfig& config, std::ostream& out);

/// Wraps run(): reports errors on `err` and maps them to exit codes.
int run_guarded(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace polya::cli
