#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prodone::cli {

enum ExitCode : int { ok = 0, inconsistent = 1, resource = 2, usage = 3 };

/// Runs one command. `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace prodone::cli
