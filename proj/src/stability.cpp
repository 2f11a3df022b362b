#include "gardner/stability.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "gardner/errors.hpp"

namespace gardner {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

struct ModeSymbols {
    double mass;       // 2 a1 cos(phi) + a2
    double curvature;  // 2 g1 cos(phi) + g2
    double slope;      // b1 sin(phi)
};

ModeSymbols symbols(const FourierProbe& p) {
    const NodalWeights& w = p.weights;
    const double c = std::cos(p.phi);
    return {2.0 * w.a1 * c + w.a2, 2.0 * w.g1 * c + w.g2, w.b1 * std::sin(p.phi)};
}

}  // namespace

double rho_momentum(const FourierProbe& probe) {
    const ModeSymbols s = symbols(probe);
    if (s.mass == 0.0) throw DomainError("degenerate mode: mass symbol vanishes");
    const cplx ratio = -2.0 * I * s.slope / s.mass;
    const cplx coupling = ratio * (0.5 * probe.dt * probe.mu) * s.curvature;
    const cplx m1 = s.mass - coupling;
    const cplx m2 = s.mass + coupling;
    const double skew = probe.dt * probe.eps_frozen * s.slope;
    const cplx den = m2 - I * skew;
    if (std::abs(den) == 0.0) throw DomainError("degenerate mode: zero denominator");
    return std::abs((m1 + I * skew) / den);
}

double rho_constraint(const FourierProbe& probe) {
    const ModeSymbols s = symbols(probe);
    const double m3 = s.mass;
    const double m4 = -s.mass;
    const double skew = 2.0 * s.slope;
    const cplx num{m3, skew};
    const cplx den{m4, -skew};
    if (std::abs(den) == 0.0) return 1.0;
    return std::abs(num / den);
}

double coupled_spectral_radius(const FourierProbe& probe) {
    const ModeSymbols s = symbols(probe);
    const double adv = probe.dt * probe.eps_frozen * s.slope;
    const double disp = 0.5 * probe.dt * probe.mu * s.curvature;

    // New-level matrix A and old-level matrix B acting on (K1, K2). The
    // linearisation moves the whole advective term to the new level on delta
    // and leaves its old-level part on the nodal value of phi.
    const cplx a11 = s.mass - I * adv, a12 = disp;
    const cplx a21 = -2.0 * I * s.slope, a22 = -s.mass;
    const cplx b11 = s.mass, b12 = -disp - 0.5 * probe.dt * probe.eps_frozen * s.mass;
    const cplx b21 = 2.0 * I * s.slope, b22 = s.mass;

    const cplx det_a = a11 * a22 - a12 * a21;
    if (std::abs(det_a) == 0.0) throw DomainError("degenerate mode: singular update");
    // G = A^{-1} B
    const cplx g11 = (a22 * b11 - a12 * b21) / det_a;
    const cplx g12 = (a22 * b12 - a12 * b22) / det_a;
    const cplx g21 = (-a21 * b11 + a11 * b21) / det_a;
    const cplx g22 = (-a21 * b12 + a11 * b22) / det_a;

    const cplx tr = g11 + g22;
    const cplx det = g11 * g22 - g12 * g21;
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    return std::max(std::abs(0.5 * (tr + disc)), std::abs(0.5 * (tr - disc)));
}

SweepGrid SweepGrid::defaults() {
    SweepGrid g;
    constexpr int kAngles = 64;
    for (int k = 0; k < kAngles; ++k) {
        g.phis.push_back(2.0 * std::numbers::pi * (k + 1) / (kAngles + 1));
    }
    for (int k = 0; k <= 8; ++k) g.eps.push_back(0.25 * k);
    g.dts = {0.01, 0.1};
    g.hs = {0.1, 0.5};
    return g;
}

StabilityReport stability_sweep(const SweepGrid& grid, BasisKind kind, double tolerance) {
    StabilityReport report;
    for (double h : grid.hs) {
        const NodalWeights w = nodal_weights(kind, h);
        for (double dt : grid.dts) {
            for (double eps : grid.eps) {
                for (double phi : grid.phis) {
                    const FourierProbe probe{phi, eps, grid.mu, dt, w};
                    StabilityPoint pt{phi, eps, dt, h, kind, rho_momentum(probe),
                                      rho_constraint(probe), coupled_spectral_radius(probe)};
                    report.max_rho_momentum = std::max(report.max_rho_momentum, pt.rho_momentum);
                    report.max_rho_constraint =
                        std::max(report.max_rho_constraint, pt.rho_constraint);
                    report.max_coupled = std::max(report.max_coupled, pt.coupled);
                    if (std::max(pt.rho_momentum, pt.rho_constraint) > 1.0 + tolerance) {
                        report.violations.push_back(pt);
                    }
                    report.points.push_back(pt);
                }
            }
        }
    }
    return report;
}

}  // namespace gardner
