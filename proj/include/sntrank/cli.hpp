#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sntrank {

// Runs one command; args excludes the program name. Returns the exit code:
// 0 ok, 1 other failure, 2 parse/usage error, 3 outside the supported family,
// 4 resource limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sntrank
