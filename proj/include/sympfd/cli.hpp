#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sympfd::cli {

/// Entry point of the `sympfd` tool. `args` excludes the program name.
/// Returns 0 on success, 2 on usage errors, 1 on numerical-validity errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympfd::cli
