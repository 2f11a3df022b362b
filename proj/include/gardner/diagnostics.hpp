#pragma once

#include <optional>
#include <vector>

#include "gardner/scenarios.hpp"
#include "gardner/stepper.hpp"

namespace gardner {

/// Momentum, energy and Hamiltonian integrals over the finite domain [a, b]:
///   m   = int u
///   e   = int u^2
///   ham = int alpha u^3/3 + beta u^4/6 - mu u_x^2
struct ConservedTriple {
    double m = 0.0;
    double e = 0.0;
    double ham = 0.0;
    /// Composite trapezoid was used because N is odd.
    bool trapezoid_fallback = false;
};

/// |(Q_t - Q_0)/Q_0| per component. When Q_0 == 0 the absolute change
/// |Q_t - Q_0| is stored instead and the matching flag is set.
struct RelativeChanges {
    double m = 0.0;
    double e = 0.0;
    double ham = 0.0;
    bool m_absolute = false;
    bool e_absolute = false;
    bool ham_absolute = false;
};

struct Peak {
    double x = 0.0;
    double height = 0.0;
};

struct PeakOptions {
    /// Lattice spacing; 0 selects h / 10.
    double resolution = 0.0;
    /// Maxima at or below this fraction of the global maximum are dropped.
    double floor_fraction = 0.05;
};

/// max_i |u(x_i, t) - U_i|. Throws DomainError if `analytic` is empty.
[[nodiscard]] double linf_error(const State& state, const std::optional<AnalyticSolution>& analytic,
                                double t);

/// Composite Simpson on the nodal values, u_x from the spline's own derivative.
[[nodiscard]] ConservedTriple conserved(const State& state, const GardnerParams& p);

[[nodiscard]] RelativeChanges relative_changes(const ConservedTriple& now,
                                               const ConservedTriple& initial);

/// Strict local maxima of evaluate_at on a uniform lattice over [a, b], sorted by x.
[[nodiscard]] std::vector<Peak> find_peaks(const SplineField& field, const PeakOptions& options = {});

/// max_i |U'_i - V_i|: how well v tracks u_x at the nodes.
[[nodiscard]] double consistency_residual(const State& state);

/// Composite Simpson (even number of intervals) or trapezoid weights applied
/// to uniformly spaced samples; the flag reports which one was used.
[[nodiscard]] double integrate_uniform(std::span<const double> samples, double h,
                                       bool* used_trapezoid = nullptr);

}  // namespace gardner
