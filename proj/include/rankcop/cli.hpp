#pragma once

#include <string>
#include <vector>

namespace rankcop::cli {

// Shared entry point for the binary and the tests; args excludes argv[0].
// Exit codes: 0 success, 2 usage, 3 data, 4 numeric failure, 1 otherwise.
int run(const std::vector<std::string>& args);

}  // namespace rankcop::cli
