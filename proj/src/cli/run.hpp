#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bhinfo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the default output format.
inline constexpr const char* kFormatEnv = "BHINFO_FORMAT";

// Entry point behind the `bhinfo` executable. `args` excludes the program
// name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bhinfo::cli
