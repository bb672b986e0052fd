#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nonproper {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_degenerate = 2, exit_not_generic = 3, exit_inconclusive = 4 };

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nonproper
