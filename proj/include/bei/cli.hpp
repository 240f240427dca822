#pragma once

// Command-line front end. Exit codes: 0 success or verified, 2 a definite
// negative answer (certificate rejected, not a member), 1 any error.

#include <ostream>
#include <string>
#include <vector>

namespace bei {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bei
