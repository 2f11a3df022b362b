#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gardner/diagnostics.hpp"
#include "gardner/scenarios.hpp"
#include "gardner/stepper.hpp"

namespace gardner {

/// One simulation request. Unset optionals fall back to the scenario defaults.
struct RunConfig {
    ScenarioName scenario = ScenarioName::Bell;
    BasisKind basis = BasisKind::Polynomial;
    std::optional<std::size_t> n;
    std::optional<double> dt;
    std::optional<double> t_end;
    std::optional<std::vector<double>> snapshot_times;
    std::optional<FieldClosures> closures;
    double epsilon_forcing = 0.0;
    std::string out_dir = ".";
    double peak_resolution = 0.0;  // 0 selects h / 10
};

/// RunConfig with every default resolved against its scenario.
struct ResolvedRun {
    Scenario scenario;
    BasisKind basis = BasisKind::Polynomial;
    std::size_t n = 0;
    GardnerParams params;
    double t_end = 0.0;
    std::size_t steps = 0;
    std::vector<std::size_t> record_steps;  // sorted, unique, always contains 0 and steps
    FieldClosures closures;
    double peak_resolution = 0.0;
};

/// Throws ConfigError when n < 8, dt <= 0, t_end is not a whole number of
/// steps, or a snapshot time falls outside [0, t_end].
[[nodiscard]] ResolvedRun resolve(const RunConfig& config);

struct Snapshot {
    double t = 0.0;
    std::vector<double> u;  // nodal values
    std::vector<double> v;
};

struct DiagnosticRecord {
    double t = 0.0;
    std::optional<double> linf;
    ConservedTriple conserved;
    RelativeChanges changes;
    double consistency = 0.0;
};

struct PeakRecord {
    double t = 0.0;
    std::vector<Peak> peaks;
};

struct RunReport {
    ResolvedRun run;
    std::shared_ptr<const Grid> grid;
    std::vector<Snapshot> snapshots;
    std::vector<DiagnosticRecord> diagnostics;
    std::vector<PeakRecord> peaks;
    std::optional<State> final_state;
    bool complete = false;
    std::string failure;  // set when a step failed and the report is partial
};

/// Interpolates the scenario's initial data, steps to t_end and records
/// diagnostics at t = 0, each snapshot time and t_end. A numerical failure
/// ends the run early with complete == false. Deterministic.
[[nodiscard]] RunReport run(const RunConfig& config);
[[nodiscard]] RunReport run(const ResolvedRun& resolved);

/// Initial state of a resolved run on the given grid.
[[nodiscard]] State initial_state(const ResolvedRun& resolved, std::shared_ptr<const Grid> grid);

}  // namespace gardner
