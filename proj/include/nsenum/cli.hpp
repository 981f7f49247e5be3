#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsenum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). `in` backs the
/// "-" input path and `out` the "-" output path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

int main(int argc, char** argv);

}  // namespace nsenum::cli
