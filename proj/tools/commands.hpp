#pragma once

#include <string>
#include <vector>

#include "run_config.hpp"

namespace majconf::cli {

enum ExitCode : int { kSuccess = 0, kValidationFailure = 1, kUsageError = 2 };

/// Output of one command: the rendered file and the exit status.
struct CommandResult {
    std::string text;
    int exit_code = kSuccess;
};

std::string header_block(const RunConfig& config, const std::string& command);

CommandResult cmd_spectrum(const RunConfig& config);

/// 0 <= n <= n_max; sign is +1 or -1.
CommandResult cmd_modes(const RunConfig& config, int n, int sign);

/// JSON lines, one per registered check. `table` receives the summary.
CommandResult cmd_validate(const RunConfig& config, std::string& table);

/// b_values must be non-empty and positive.
CommandResult cmd_sweep(const RunConfig& config, const std::vector<double>& b_values);

/// "-" writes to stdout.
void write_output(const std::string& path, const std::string& text);

}  // namespace majconf::cli
