#pragma once

// Command-line front end. Subcommands: info, classify, ideals, verify,
// search, example. Exit status 0 on success, 1 when a verification or
// replay fails, 2 on usage and parse errors.

#include <iosfwd>

namespace qjlab::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qjlab::cli
