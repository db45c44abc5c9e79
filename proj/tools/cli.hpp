#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace indec::cli {

// Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 file I/O
// error, and 10 + k for a library error of kind k (see `indec --help`).
constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIO = 3;
constexpr int kExitLibraryBase = 10;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indec::cli
