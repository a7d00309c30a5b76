#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linkednets::cli {

/// Runs one command. `args` excludes the program name. Returns the exit code:
/// 0 success, 1 property fails, 2 input or window error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace linkednets::cli
