#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nht/correlation.hpp"

namespace nht::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

struct RunReport {
    std::string command;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::optional<Convention> convention;
    std::vector<std::string> diagnostics;
    int exit_status = exit_ok;

    std::string to_json() const;
};

/// Runs one subcommand. `args` excludes the program name. Primary output
/// goes to `out` unless --out is given; diagnostics and usage go to `err`.
RunReport run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nht::cli
