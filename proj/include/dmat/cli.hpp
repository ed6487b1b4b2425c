#ifndef DMAT_CLI_HPP
#define DMAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dmat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmat::cli

#endif
