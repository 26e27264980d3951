#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pcpkg::cli {

// Exit statuses of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // module error, lint findings under --strict, empty diff
inline constexpr int kExitUsage = 2;   // bad flags, missing files, invalid config

// Runs one `pcpkg` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcpkg::cli
