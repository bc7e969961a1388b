#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twklv::cli {

// Runs one invocation; args excludes the program name. Returns 0 on
// success, 1 on validation or solver failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twklv::cli
