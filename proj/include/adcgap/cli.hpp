#ifndef ADCGAP_CLI_HPP
#define ADCGAP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace adcgap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` (or to files under --out), diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adcgap

#endif  // ADCGAP_CLI_HPP
