#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rackyd::cli {

/// Runs one subcommand. `args` excludes the program name. Returns 0 when every
/// check passes, 1 on a mathematical failure and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rackyd::cli
