#ifndef DSING_TOOLS_CLI_HPP
#define DSING_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dsing::cli {

// Exit codes. check reports its verdict through the exit status.
inline constexpr int kExitNonsingular = 0;
inline constexpr int kExitSingular = 10;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitCannotCreate = 73;
inline constexpr int kExitInternal = 70;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsing::cli

#endif  // DSING_TOOLS_CLI_HPP
