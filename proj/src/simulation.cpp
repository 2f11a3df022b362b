#include "gardner/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gardner/errors.hpp"

namespace gardner {

namespace {

std::size_t whole_steps(double t, double dt, const char* what) {
    const double ratio = t / dt;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-6) {
        throw ConfigError(std::string(what) + " must be a whole number of time steps");
    }
    return static_cast<std::size_t>(rounded);
}

}  // namespace

ResolvedRun resolve(const RunConfig& config) {
    ResolvedRun r;
    r.scenario = scenario_config(config.scenario);
    r.basis = config.basis;
    r.n = config.n.value_or(r.scenario.n);
    r.params = r.scenario.params;
    r.params.dt = config.dt.value_or(r.scenario.params.dt);
    r.params.epsilon_forcing = config.epsilon_forcing;
    r.t_end = config.t_end.value_or(r.scenario.t_end);
    r.closures = config.closures.value_or(r.scenario.closures(r.basis));
    r.peak_resolution = config.peak_resolution;

    if (r.n < 8) throw ConfigError("n must be at least 8");
    if (!(r.params.dt > 0.0) || !std::isfinite(r.params.dt)) throw ConfigError("dt must be positive");
    if (!(r.t_end >= 0.0) || !std::isfinite(r.t_end)) throw ConfigError("t_end must be non-negative");
    if (r.peak_resolution < 0.0) throw ConfigError("peak resolution must be non-negative");
    r.steps = whole_steps(r.t_end, r.params.dt, "t_end");

    // Explicit snapshot lists are taken as given; scenario defaults are
    // clipped to the requested horizon.
    std::vector<double> times;
    if (config.snapshot_times) {
        times = *config.snapshot_times;
        for (double t : times) {
            if (!(t >= 0.0 && t <= r.t_end + 1e-12)) {
                throw ConfigError("snapshot time " + std::to_string(t) + " outside [0, t_end]");
            }
        }
    } else {
        for (double t : r.scenario.snapshot_times) {
            if (t <= r.t_end + 1e-12) times.push_back(t);
        }
    }

    r.record_steps.push_back(0);
    for (double t : times) r.record_steps.push_back(whole_steps(t, r.params.dt, "snapshot time"));
    r.record_steps.push_back(r.steps);
    std::sort(r.record_steps.begin(), r.record_steps.end());
    r.record_steps.erase(std::unique(r.record_steps.begin(), r.record_steps.end()),
                         r.record_steps.end());
    return r;
}

State initial_state(const ResolvedRun& resolved, std::shared_ptr<const Grid> grid) {
    const NodalWeights w = nodal_weights(resolved.basis, grid->h());
    const auto nodes = grid->nodes();
    std::vector<double> u(nodes.size()), v(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        u[i] = resolved.scenario.initial(nodes[i]);
        v[i] = resolved.scenario.initial_derivative(nodes[i]);
    }
    return make_state(0.0, u, v, std::move(grid), w, resolved.closures);
}

RunReport run(const RunConfig& config) { return run(resolve(config)); }

RunReport run(const ResolvedRun& resolved) {
    RunReport report;
    report.run = resolved;
    report.grid = std::make_shared<const Grid>(resolved.scenario.a, resolved.scenario.b, resolved.n);
    resolved.params.validate();

    State state = initial_state(resolved, report.grid);
    const ConservedTriple initial = conserved(state, resolved.params);
    const PeakOptions peak_options{resolved.peak_resolution, 0.05};

    auto record = [&](const State& s) {
        report.snapshots.push_back({s.t, nodal_values(s.u), nodal_values(s.v)});
        DiagnosticRecord d;
        d.t = s.t;
        if (resolved.scenario.analytic) d.linf = linf_error(s, resolved.scenario.analytic, s.t);
        d.conserved = conserved(s, resolved.params);
        d.changes = relative_changes(d.conserved, initial);
        d.consistency = consistency_residual(s);
        report.diagnostics.push_back(std::move(d));
        report.peaks.push_back({s.t, find_peaks(s.u, peak_options)});
    };

    record(state);
    auto next_record = resolved.record_steps.begin() + 1;
    try {
        for (std::size_t k = 1; k <= resolved.steps; ++k) {
            state = step(state, resolved.params);
            state.t = static_cast<double>(k) * resolved.params.dt;
            if (next_record != resolved.record_steps.end() && *next_record == k) {
                record(state);
                ++next_record;
            }
        }
    } catch (const Error& e) {
        report.failure = e.what();
        report.final_state = std::move(state);
        return report;
    }
    report.final_state = std::move(state);
    report.complete = true;
    return report;
}

}  // namespace gardner
