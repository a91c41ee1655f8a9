#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cocv {

// Exit codes of `cocv check`.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cocv
