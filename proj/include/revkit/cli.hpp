#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name. A path of "-" (the default for --in and
// --out) means `in` / `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace revkit::cli
