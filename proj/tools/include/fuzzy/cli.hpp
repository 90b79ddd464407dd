#ifndef FUZZY_CLI_HPP
#define FUZZY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;

/// Runs one fuzzyctl invocation. `args` excludes the program name. Scalars
/// and summaries go to `out`, diagnostics to `err`; structured results are
/// written to the files named by the command's flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzy::cli

#endif  // FUZZY_CLI_HPP
