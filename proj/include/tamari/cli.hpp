#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tamari {

// Runs the command-line front end. Exit status 0 on success or PASS, 1 when
// a verification fails, 2 on usage or resource-bound errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tamari
