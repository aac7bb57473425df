#pragma once

#include <string>
#include <vector>

namespace lfsyn::cli {

/// Runs one command line (args[0] is the program name). Returns the process
/// exit code; errors are reported on stderr.
int run(const std::vector<std::string> &args);

} // namespace lfsyn::cli
