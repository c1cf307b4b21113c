#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycat::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kValidation = 2;
inline constexpr int kBudget = 3;
inline constexpr int kUsage = 64;

/// Runs one polycat command. `args` excludes the program name. Results and
/// structured errors go to `out` as JSON; usage text goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycat::cli
