#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace elw::cli {

/// Runs one elwlab command. `args` excludes the program name.
/// Returns 0 for ok/admissible, 1 for violation/inadmissible and 2 for
/// malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elw::cli
