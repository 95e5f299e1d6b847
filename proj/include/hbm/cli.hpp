#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hbm {

/// Runs one hbm command. `args` excludes the program name. Returns the exit
/// status: 0 when every requested check passes, 1 when a check fails or the
/// datum is invalid, 2 for input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbm
