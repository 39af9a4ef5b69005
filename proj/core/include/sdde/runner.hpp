#pragma once

#include <iosfwd>

#include "sdde/config.hpp"

namespace sdde {

/// Executes the configured command and writes its CSV output. Throws the
/// module errors on failure.
void run(const RunConfig& config);

/// run() wrapped for the CLI: prints a one-line diagnostic to `diag` and
/// maps errors to exit codes (0 ok, 1 config, 2 numeric guard, 3 I/O).
int run_with_exit_code(const RunConfig& config, std::ostream& diag);

}  // namespace sdde
