// Batch command layer behind the `chronon` executable. Every command is a
// plain function returning the process exit code:
//   0  completed, all checks passed
//   1  numerical check or integration failure
//   2  usage / configuration error
#pragma once

#include <optional>
#include <string>

namespace chronon {

struct CliOverrides {
    std::optional<std::string> formulation;
    std::optional<std::string> transmission;
    std::optional<std::string> units;
};

/// True when CHRONON_LOG is set to a non-empty, non-"0" value.
bool log_enabled();
void log_line(const std::string& msg);

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const CliOverrides& overrides);
int cmd_check_identities(int max_m, int n_trunc, const std::string& out_dir);
int cmd_compare(const std::string& config_path, const std::string& out_dir);
int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              const CliOverrides& overrides);

}  // namespace chronon
