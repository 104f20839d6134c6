#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turansw {

// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
// input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turansw
