#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ho::cli {

/// Runs the `ho` command line with arguments (program name excluded).
/// Reports go to `out` (or the --output file), diagnostics to `err`.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ho::cli
