#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerchar::cli {

/// Runs the command line `args` (program name excluded). Returns the exit
/// code: 0 success, 1 input or parse error, 2 capacity or overflow.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Same, on the standard streams.
int run(const std::vector<std::string>& args);

}  // namespace eulerchar::cli
