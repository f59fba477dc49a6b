#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gengraph {

// Full command-line front end; returns the process exit code.
// Exit codes: 0 success, 1 verification failure, 2 bad input,
// 3 element not in the group, 4 resource cap exceeded, 5 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gengraph
