#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metdim::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 2 when `verify` finds a formula that disagrees with the
/// exact value, 1 on any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metdim::cli
