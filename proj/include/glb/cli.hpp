#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace glb::cli {

/// Runs one glbtool invocation. `args` excludes the program name.
/// Returns 0 when all checks pass, 1 when a check fails (the report is still
/// written), 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glb::cli
