#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quivgr::cli {

/// Runs one invocation; args excludes the program name. Returns the exit
/// code: 0 success, 1 computational refusal, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quivgr::cli
