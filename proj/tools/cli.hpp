#ifndef MIURA_TOOLS_CLI_HPP
#define MIURA_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace miura::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kSemanticFailure = 1;
inline constexpr int kMalformedInput = 2;
inline constexpr int kNotApplicable = 3;

// Runs one command. args excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace miura::cli

#endif  // MIURA_TOOLS_CLI_HPP
