#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brauer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. JSON goes to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Suite names accepted by `verify --suite`, in the order `--all` runs them.
const std::vector<std::string>& suite_names();

}  // namespace brauer::cli
