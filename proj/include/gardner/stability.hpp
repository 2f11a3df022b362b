#pragma once

#include <vector>

#include "gardner/basis.hpp"

namespace gardner {

/// One Fourier mode delta_j = K1 xi^n e^{i j phi}, phi_j = K2 xi^n e^{i j phi}
/// of the scheme with the nonlinear coefficient u + u^2 frozen at eps_frozen.
/// The half-step weights of the advective and dispersive terms are
/// dt*eps_frozen/2 and dt*mu/2.
struct FourierProbe {
    double phi = 0.0;  // k h
    double eps_frozen = 0.0;
    double mu = 1.0;
    double dt = 0.1;
    NodalWeights weights;
};

/// |rho| of the momentum equation, rho = (M1 + i s)/(M2 - i s), with the
/// amplitude ratio K2/K1 = -2 i b1 sin(phi) / (2 a1 cos(phi) + a2) taken from
/// the averaged constraint. Throws DomainError when the denominator vanishes.
[[nodiscard]] double rho_momentum(const FourierProbe& probe);

/// |rho| of the constraint equation, rho = (M3 + i s)/(M4 - i s) with unit
/// amplitudes and M4 = -M3, hence 1 up to rounding.
[[nodiscard]] double rho_constraint(const FourierProbe& probe);

/// Spectral radius of the one-step map of the implemented scheme, linearised
/// about the constant state u = k, v = 0 with alpha k + beta k^2 = eps_frozen.
/// The old-level advective term acts on v rather than on u_x. Reported in the
/// sweep but not counted as a violation.
[[nodiscard]] double coupled_spectral_radius(const FourierProbe& probe);

struct SweepGrid {
    std::vector<double> phis;
    std::vector<double> eps;
    std::vector<double> dts;
    std::vector<double> hs;
    double mu = 1.0;

    /// 64 interior angles in (0, 2 pi), eps in {0, 0.25, ..., 2},
    /// dt in {0.01, 0.1}, h in {0.1, 0.5}.
    static SweepGrid defaults();
};

struct StabilityPoint {
    double phi = 0.0;
    double eps = 0.0;
    double dt = 0.0;
    double h = 0.0;
    BasisKind basis = BasisKind::Polynomial;
    double rho_momentum = 0.0;
    double rho_constraint = 0.0;
    double coupled = 0.0;
};

struct StabilityReport {
    std::vector<StabilityPoint> points;
    double max_rho_momentum = 0.0;
    double max_rho_constraint = 0.0;
    double max_coupled = 0.0;
    std::vector<StabilityPoint> violations;  // momentum or constraint factor above 1 + tolerance
};

inline constexpr double kStabilityTolerance = 1e-10;

[[nodiscard]] StabilityReport stability_sweep(const SweepGrid& grid, BasisKind kind,
                                              double tolerance = kStabilityTolerance);

}  // namespace gardner
