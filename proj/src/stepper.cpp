#include "gardner/stepper.hpp"

#include <array>
#include <cmath>

#include "gardner/errors.hpp"

namespace gardner {

void GardnerParams::validate() const {
    if (alpha == 0.0 || beta == 0.0 || mu == 0.0) {
        throw DomainError("alpha, beta and mu must be nonzero");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
}

EtaRow linearize(double k, double l, const GardnerParams& p, const NodalWeights& w) {
    const double inv = 2.0 / p.dt;
    const double diag = inv + p.alpha * l + 2.0 * p.beta * k * l;
    const double skew = (p.alpha * k + p.beta * k * k) * w.b1;
    const double old = inv + p.beta * k * l;

    EtaRow row;
    row.eta1 = diag * w.a1 + skew;
    row.eta2 = p.mu * w.g1;
    row.eta3 = diag * w.a2;
    row.eta4 = p.mu * w.g2;
    row.eta5 = diag * w.a1 - skew;
    row.eta6 = old * w.a1;
    row.eta7 = old * w.a2;
    row.k = k;
    row.l = l;
    return row;
}

namespace {

// Column of coefficient `node` (-1..N+1) of field `component` (0 = delta, 1 = phi),
// with ghosts folded onto interior columns.
class RowWriter {
public:
    RowWriter(BandedMatrix& m, std::size_t n, GhostRule u_left, GhostRule u_right,
              GhostRule v_left, GhostRule v_right)
        : m_(m), n_(n), rules_{{{u_left, u_right}, {v_left, v_right}}} {}

    void put(std::size_t row, int component, std::ptrdiff_t node, double value) {
        const auto c = static_cast<std::size_t>(component);
        const auto col = [c](std::size_t i) { return 2 * i + c; };
        if (node < 0) {
            const GhostRule r = rules_[c][0];
            m_.add(row, col(0), value * r.c0);
            m_.add(row, col(1), value * r.c1);
        } else if (static_cast<std::size_t>(node) > n_) {
            const GhostRule r = rules_[c][1];
            m_.add(row, col(n_), value * r.c0);
            m_.add(row, col(n_ - 1), value * r.c1);
        } else {
            m_.add(row, col(static_cast<std::size_t>(node)), value);
        }
    }

private:
    BandedMatrix& m_;
    std::size_t n_;
    std::array<std::array<GhostRule, 2>, 2> rules_;
};

}  // namespace

LinearSystem assemble(const State& state, const GardnerParams& p) {
    const std::size_t n = state.u.grid().n();
    if (state.v.grid().n() != n) throw DomainError("assemble: u and v grids differ");
    const NodalWeights& w = state.u.weights();

    const std::vector<double> u_nodes = nodal_values(state.u);
    const std::vector<double> v_nodes = nodal_values(state.v);

    const std::size_t dim = 2 * (n + 1);
    LinearSystem sys{BandedMatrix(dim, 3, 3), std::vector<double>(dim, 0.0)};
    RowWriter writer(sys.matrix, n, state.u.left_rule(), state.u.right_rule(), state.v.left_rule(),
                     state.v.right_rule());

    for (std::size_t j = 0; j <= n; ++j) {
        const auto node = static_cast<std::ptrdiff_t>(j);
        const EtaRow eta = linearize(u_nodes[j], v_nodes[j], p, w);
        const std::size_t momentum = 2 * j;
        const std::size_t constraint = 2 * j + 1;

        writer.put(momentum, 0, node - 1, eta.eta1);
        writer.put(momentum, 1, node - 1, eta.eta2);
        writer.put(momentum, 0, node, eta.eta3);
        writer.put(momentum, 1, node, eta.eta4);
        writer.put(momentum, 0, node + 1, eta.eta5);
        writer.put(momentum, 1, node + 1, eta.eta2);

        const double dl = state.u.coeff(node - 1), dc = state.u.coeff(node),
                     dr = state.u.coeff(node + 1);
        const double pl = state.v.coeff(node - 1), pc = state.v.coeff(node),
                     pr = state.v.coeff(node + 1);
        sys.rhs[momentum] = eta.eta6 * (dl + dr) + eta.eta7 * dc -
                            (eta.eta2 * (pl + pr) + eta.eta4 * pc) + 2.0 * p.epsilon_forcing;

        writer.put(constraint, 0, node - 1, -w.b1);
        writer.put(constraint, 1, node - 1, w.a1);
        writer.put(constraint, 1, node, w.a2);
        writer.put(constraint, 0, node + 1, w.b1);
        writer.put(constraint, 1, node + 1, w.a1);
        sys.rhs[constraint] = w.b1 * dl - w.a1 * pl - w.a2 * pc - w.b1 * dr - w.a1 * pr;
    }
    return sys;
}

State step(const State& state, const GardnerParams& p) {
    const LinearSystem sys = assemble(state, p);
    const std::vector<double> x = solve(sys.matrix, sys.rhs);

    const std::size_t n = state.u.grid().n();
    std::vector<double> delta(n + 1), phi(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        delta[i] = x[2 * i];
        phi[i] = x[2 * i + 1];
    }
    State next{state.t + p.dt, state.u, state.v};
    next.u.set_interior(delta);
    next.v.set_interior(phi);
    return next;
}

State make_state(double t, std::span<const double> u_samples, std::span<const double> v_samples,
                 std::shared_ptr<const Grid> grid, const NodalWeights& weights,
                 const FieldClosures& closures) {
    SplineField u = interpolate(u_samples, grid, weights, closures.u);
    SplineField v = interpolate(v_samples, std::move(grid), weights, closures.v);
    return State{t, std::move(u), std::move(v)};
}

}  // namespace gardner
