#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tautchi::cli {

// Runs the tautchi command line tool on `args` (without the program name).
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tautchi::cli
