#include "gardner/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "gardner/errors.hpp"

namespace gardner {

double integrate_uniform(std::span<const double> samples, double h, bool* used_trapezoid) {
    const std::size_t count = samples.size();
    if (count < 2) {
        if (used_trapezoid) *used_trapezoid = false;
        return 0.0;
    }
    const std::size_t intervals = count - 1;
    if (intervals % 2 == 0) {
        double odd = 0.0, even = 0.0;
        for (std::size_t i = 1; i < intervals; ++i) (i % 2 ? odd : even) += samples[i];
        if (used_trapezoid) *used_trapezoid = false;
        return h / 3.0 * (samples.front() + samples.back() + 4.0 * odd + 2.0 * even);
    }
    double inner = 0.0;
    for (std::size_t i = 1; i < intervals; ++i) inner += samples[i];
    if (used_trapezoid) *used_trapezoid = true;
    return h * (0.5 * (samples.front() + samples.back()) + inner);
}

double linf_error(const State& state, const std::optional<AnalyticSolution>& analytic, double t) {
    if (!analytic || !*analytic) throw DomainError("scenario has no analytic solution");
    const std::vector<double> u = nodal_values(state.u);
    const auto nodes = state.u.grid().nodes();
    double worst = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        worst = std::max(worst, std::abs((*analytic)(nodes[i], t) - u[i]));
    }
    return worst;
}

ConservedTriple conserved(const State& state, const GardnerParams& p) {
    const std::vector<double> u = nodal_values(state.u);
    const std::vector<double> ux = nodal_first_derivs(state.u);
    const double h = state.u.grid().h();

    std::vector<double> sq(u.size()), ham(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double u2 = u[i] * u[i];
        sq[i] = u2;
        ham[i] = p.alpha * u2 * u[i] / 3.0 + p.beta * u2 * u2 / 6.0 - p.mu * ux[i] * ux[i];
    }
    ConservedTriple c;
    c.m = integrate_uniform(u, h, &c.trapezoid_fallback);
    c.e = integrate_uniform(sq, h);
    c.ham = integrate_uniform(ham, h);
    return c;
}

RelativeChanges relative_changes(const ConservedTriple& now, const ConservedTriple& initial) {
    auto change = [](double q, double q0, bool& absolute) {
        absolute = (q0 == 0.0);
        return absolute ? std::abs(q - q0) : std::abs((q - q0) / q0);
    };
    RelativeChanges r;
    r.m = change(now.m, initial.m, r.m_absolute);
    r.e = change(now.e, initial.e, r.e_absolute);
    r.ham = change(now.ham, initial.ham, r.ham_absolute);
    return r;
}

std::vector<Peak> find_peaks(const SplineField& field, const PeakOptions& options) {
    const Grid& g = field.grid();
    const double step = options.resolution > 0.0 ? options.resolution : g.h() / 10.0;
    const auto count = static_cast<std::size_t>(std::floor((g.b() - g.a()) / step + 1e-9)) + 1;
    if (count < 3) return {};

    std::vector<double> xs(count), ys(count);
    for (std::size_t k = 0; k < count; ++k) {
        xs[k] = std::min(g.b(), g.a() + static_cast<double>(k) * step);
        ys[k] = evaluate_at(field, xs[k]);
    }
    const double global = *std::max_element(ys.begin(), ys.end());
    const double floor = options.floor_fraction * global;

    std::vector<Peak> peaks;
    for (std::size_t k = 1; k + 1 < count; ++k) {
        if (ys[k] > ys[k - 1] && ys[k] > ys[k + 1] && ys[k] > floor) {
            peaks.push_back({xs[k], ys[k]});
        }
    }
    return peaks;
}

double consistency_residual(const State& state) {
    const std::vector<double> ux = nodal_first_derivs(state.u);
    const std::vector<double> v = nodal_values(state.v);
    double worst = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(ux[i] - v[i]));
    return worst;
}

}  // namespace gardner
