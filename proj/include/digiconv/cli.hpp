// Command-line front end. Exit codes: 0 convex / success, 1 not convex,
// 2 input or resource error.
#pragma once

#include <string>
#include <vector>

namespace digiconv {

int run_cli(const std::vector<std::string>& args);

}  // namespace digiconv
