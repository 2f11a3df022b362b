#pragma once

#include <vector>

#include "gardner/banded.hpp"
#include "gardner/basis.hpp"
#include "gardner/grid_field.hpp"

namespace gardner {

/// Coefficients of u_t + alpha u u_x + beta u^2 u_x + mu u_xxx = epsilon_forcing.
struct GardnerParams {
    double alpha = 1.0;
    double beta = 1.0;
    double mu = 1.0;
    double dt = 0.1;
    double epsilon_forcing = 0.0;

    /// Throws DomainError if a coefficient is zero or dt is not positive.
    void validate() const;
};

/// Closures for the two unknown fields: u (coefficients delta) and v = u_x (phi).
struct FieldClosures {
    BoundaryClosure u;
    BoundaryClosure v;
};

/// Solution at time t of the first-order system u_t + ... + mu v_xx = 0, v = u_x.
struct State {
    double t = 0.0;
    SplineField u;
    SplineField v;
};

/// Per-node coefficients of the linearised momentum row.
///
/// eta1/eta3/eta5 multiply delta_{j-1}, delta_j, delta_{j+1} at the new level,
/// eta2/eta4 multiply phi_{j±1} and phi_j, eta6/eta7 are the old-level delta
/// weights on the right-hand side. k and l are the old nodal values U_j, V_j.
struct EtaRow {
    double eta1 = 0.0;
    double eta2 = 0.0;
    double eta3 = 0.0;
    double eta4 = 0.0;
    double eta5 = 0.0;
    double eta6 = 0.0;
    double eta7 = 0.0;
    double k = 0.0;
    double l = 0.0;
};

/// Crank–Nicolson weights with the products (u u_x)^{n+1} and (u^2 u_x)^{n+1}
/// expanded to first order about the old level.
[[nodiscard]] EtaRow linearize(double k, double l, const GardnerParams& p, const NodalWeights& w);

/// The 2(N+1) collocation system for one step, unknowns interleaved as
/// (delta_0, phi_0, delta_1, phi_1, ...). Row 2j is the momentum equation at
/// x_j, row 2j+1 the constraint v = u_x; ghosts are substituted out.
struct LinearSystem {
    BandedMatrix matrix;
    std::vector<double> rhs;
};

[[nodiscard]] LinearSystem assemble(const State& state, const GardnerParams& p);

/// Advances one time step: one assembly and one banded solve, no iteration.
/// Propagates SingularMatrixError.
[[nodiscard]] State step(const State& state, const GardnerParams& p);

/// Builds a state from nodal samples of u and v.
[[nodiscard]] State make_state(double t, std::span<const double> u_samples,
                               std::span<const double> v_samples,
                               std::shared_ptr<const Grid> grid, const NodalWeights& weights,
                               const FieldClosures& closures);

}  // namespace gardner
