#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uavcover {

// Full command-line entry point, callable in-process for tests.
// Exit codes: 0 success, 2 infeasible, 3 input error, 4 internal tolerance
// failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace uavcover
