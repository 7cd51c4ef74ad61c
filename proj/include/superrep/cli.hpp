#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srep {

// Exit codes: 0 = success, 1 = a mathematical check failed, 2 = input error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace srep
