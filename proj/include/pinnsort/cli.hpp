#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pinnsort::cli {

// Runs one CLI invocation. Exit codes: 0 success, 1 domain or internal
// error, 2 usage/parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pinnsort::cli
