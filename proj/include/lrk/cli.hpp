#pragma once
#include <string>
#include <vector>

namespace lrk::cli {

inline constexpr const char* kVersion = "lrk 1.0.0";

// Dispatch a command line (excluding argv[0]). Returns the process exit
// code: 0 success, 2 flag/usage errors, 3 numerical-tolerance failures.
// Errors are reported as one-line JSON on stderr.
int run(const std::vector<std::string>& args);

}  // namespace lrk::cli
