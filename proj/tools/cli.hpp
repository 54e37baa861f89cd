#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace facering::cli {

/// Runs one command line (args excludes the program name). The JSON report
/// goes to `out` (or to --out), errors go to `err` as a JSON object.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace facering::cli
