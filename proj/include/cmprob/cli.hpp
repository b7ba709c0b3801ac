#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cmprob {

// Exit codes of the command line front end.
enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cmprob
