// SPDX-License-Identifier: Apache-2.0

#ifndef ZETASUM_CLI_HPP
#define ZETASUM_CLI_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetasum/complex_kernel.hpp"

namespace zetasum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,
  kExitNotConverged = 2,
  kExitSelftestFailed = 3,
  kExitUsage = 64,
};

/// Environment variables read before flags; flags win.
inline constexpr std::string_view kEnvPrefix = "ZETASUM_";

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

std::optional<std::string> process_env(const std::string& name);

/// "2", "-0.5", "2.5+1i", "1e-3-2e-2i", "3i", "-i". No whitespace.
std::optional<Complex> parse_complex(std::string_view text);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

/// Entry point. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_env);

}  // namespace zetasum::cli

#endif  // ZETASUM_CLI_HPP
