#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "primesum/harness.hpp"

namespace primesum {

// Parsed command line for the `primesum` tool. One subcommand per
// invocation; fields beyond the active subcommand keep their defaults.
struct CliConfig {
    std::string subcommand;

    // coeffs
    int s_max = 2;
    int i_max = 2;
    int j_max = 2;

    // expand / eval / sweep / check
    int order = 2;
    std::string cipolla_file;  // empty: use built-in coefficients
    bool emit_coeffs = false;

    // eval
    long long n = 0;

    // sieve
    long long upto_count = 0;

    // sieve / sweep
    std::vector<long long> grid;

    // sweep
    std::vector<int> orders = {1, 2};
    bool grid_default = false;  // force the default grid (also the fallback)
    std::string out_path;
    ReportFormat format = ReportFormat::csv;
};

// Parses and validates arguments (natural order, no program name). Throws
// CLI::ParseError for flag-level problems and std::invalid_argument for
// semantic ones (non-increasing grid, bad order set, missing mode).
CliConfig parse_args(const std::vector<std::string>& args);

// Full tool entry point: data on `out`, diagnostics on `err`.
// Exit status: 0 ok, 1 usage error, 2 computation error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Embedded self-test (subcommand `check`): recurrence vanishing grid, the
// closed-form polynomial references, the integral identity for t/log t, and
// segmented-vs-naive sieve agreement; optionally validates a user coefficient
// file. Prints one line per check; returns 0 iff all pass.
int run_check(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace primesum
