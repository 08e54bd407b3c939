#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semishell {

// Command-line driver. `args` excludes the program name.
// Exit codes: 0 success, 1 verification failures, 2 parse/validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semishell
