#pragma once

#include <string>
#include <vector>

namespace vog {

// Exit codes: 0 success, 1 usage, 2 I/O, 3 data validation.
int run_cli(const std::vector<std::string>& args);

} // namespace vog
