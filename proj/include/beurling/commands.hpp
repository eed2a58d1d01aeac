#pragma once

#include <string>

#include "beurling/config.hpp"

namespace beurling {

// Dispatches one CLI command, writes its CSV to config.output_path, and
// prints a one-line summary to stdout (suppressed by quiet). Returns the
// process exit code: 0 success, 1 config or domain error, 2 resource cap,
// 3 numerical failure. Error text goes to stderr.
int run_command(const std::string& name, const RunConfig& config, bool quiet);

}  // namespace beurling
