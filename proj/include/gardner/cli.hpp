#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gardner/simulation.hpp"
#include "gardner/stability.hpp"

namespace gardner::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kConfig = 3,
    kNumerical = 4,
};

/// Entry point behind the `gardner` executable.
int main(const std::vector<std::string>& args);

/// printf("%.12g"); every number in every CSV goes through here.
[[nodiscard]] std::string format_number(double value);

/// Reads `key = value` lines; '#' starts a comment. Throws ConfigError on
/// malformed lines or unreadable files.
[[nodiscard]] std::map<std::string, std::string> read_key_value_file(
    const std::filesystem::path& path);

/// Splits "1,2.5,4" into numbers. Throws ConfigError on bad tokens.
[[nodiscard]] std::vector<double> parse_number_list(const std::string& text);

/// Builds a RunConfig from merged key/value settings (keys as the long flag names).
[[nodiscard]] RunConfig run_config_from(const std::map<std::string, std::string>& settings);

// snapshots.csv: t,x,u,v
void write_snapshots_csv(const RunReport& report, const std::filesystem::path& path);
// diagnostics.csv: t,linf,M,E,H,C_M,C_E,C_H (linf blank without an analytic solution)
void write_diagnostics_csv(const RunReport& report, const std::filesystem::path& path);
// peaks.csv: t,peak_index,x,height
void write_peaks_csv(const RunReport& report, const std::filesystem::path& path);
// stability.csv: phi,eps,dt,h,basis,rho_momentum,rho_constraint
void write_stability_csv(const std::vector<StabilityPoint>& points,
                         const std::filesystem::path& path);

}  // namespace gardner::cli
