#pragma once

// Direct transcription of the linearised Crank-Nicolson collocation scheme.
//
// Every row is written over the full set of N+3 coefficients per field,
// ghosts included, exactly as the stencil reads. Ghost columns are folded
// afterwards using closure relations re-derived here from the stencils:
//   first derivative zero:  -b1 d_{-1} + b1 d_1 = 0          => d_{-1} = d_1
//   second derivative zero:  g1 d_{-1} + g2 d_0 + g1 d_1 = 0 => d_{-1} = -(g2/g1) d_0 - d_1
// and mirrored at the right end.

#include <cstddef>
#include <vector>

#include "dense.hpp"
#include "gardner/stepper.hpp"

namespace oracle {

struct LiteralSystem {
    DenseMatrix a;          // 2(N+1) x 2(N+1), interleaved unknowns
    std::vector<double> b;  // right-hand side
};

inline std::vector<double> ghost_row(gardner::Closure c, const gardner::NodalWeights& w) {
    // coefficients of (d_0, d_1) replacing d_{-1}
    if (c == gardner::Closure::Neumann1) return {0.0, 1.0};
    return {-w.g2 / w.g1, -1.0};
}

inline LiteralSystem literal_system(const gardner::State& s, const gardner::GardnerParams& p) {
    const gardner::NodalWeights& w = s.u.weights();
    const std::size_t n = s.u.grid().n();
    const std::size_t m = n + 3;  // coefficients -1..N+1 per field

    // full matrices over (delta_{-1..N+1}, phi_{-1..N+1})
    DenseMatrix full = zeros(2 * (n + 1), 2 * m);
    DenseMatrix old = zeros(2 * (n + 1), 2 * m);
    auto d = [](std::size_t k) { return k; };          // delta_{k-1}
    auto f = [m](std::size_t k) { return m + k; };     // phi_{k-1}

    for (std::size_t j = 0; j <= n; ++j) {
        const std::size_t l = j, c = j + 1, r = j + 2;  // indices of d_{j-1}, d_j, d_{j+1}
        const double dl = s.u.coeffs()[l], dc = s.u.coeffs()[c], dr = s.u.coeffs()[r];
        const double pl = s.v.coeffs()[l], pc = s.v.coeffs()[c], pr = s.v.coeffs()[r];
        const double K = w.a1 * dl + w.a2 * dc + w.a1 * dr;
        const double L = w.a1 * pl + w.a2 * pc + w.a1 * pr;

        const double D = 2.0 / p.dt + p.alpha * L + 2.0 * p.beta * K * L;
        const double S = (p.alpha * K + p.beta * K * K) * w.b1;
        const double O = 2.0 / p.dt + p.beta * K * L;

        const std::size_t row = 2 * j;
        full[row][d(l)] = D * w.a1 + S;
        full[row][d(c)] = D * w.a2;
        full[row][d(r)] = D * w.a1 - S;
        full[row][f(l)] = p.mu * w.g1;
        full[row][f(c)] = p.mu * w.g2;
        full[row][f(r)] = p.mu * w.g1;
        old[row][d(l)] = O * w.a1;
        old[row][d(c)] = O * w.a2;
        old[row][d(r)] = O * w.a1;
        old[row][f(l)] = -p.mu * w.g1;
        old[row][f(c)] = -p.mu * w.g2;
        old[row][f(r)] = -p.mu * w.g1;

        // (V - U_x) at both levels, averaged: new-level terms on the left
        const std::size_t con = 2 * j + 1;
        full[con][d(l)] = -w.b1;
        full[con][d(r)] = w.b1;
        full[con][f(l)] = w.a1;
        full[con][f(c)] = w.a2;
        full[con][f(r)] = w.a1;
        old[con][d(l)] = w.b1;
        old[con][d(r)] = -w.b1;
        old[con][f(l)] = -w.a1;
        old[con][f(c)] = -w.a2;
        old[con][f(r)] = -w.a1;
    }

    std::vector<double> coeffs(2 * m);
    for (std::size_t k = 0; k < m; ++k) {
        coeffs[d(k)] = s.u.coeffs()[k];
        coeffs[f(k)] = s.v.coeffs()[k];
    }
    std::vector<double> b = dense_multiply(old, coeffs);
    for (std::size_t j = 0; j <= n; ++j) b[2 * j] += 2.0 * p.epsilon_forcing;

    // fold ghosts, then drop them
    const auto fold = [&](std::size_t ghost, std::size_t near0, std::size_t near1,
                          const std::vector<double>& rule) {
        for (auto& rowv : full) {
            rowv[near0] += rowv[ghost] * rule[0];
            rowv[near1] += rowv[ghost] * rule[1];
            rowv[ghost] = 0.0;
        }
    };
    fold(d(0), d(1), d(2), ghost_row(s.u.closure().left, w));
    fold(d(m - 1), d(m - 2), d(m - 3), ghost_row(s.u.closure().right, w));
    fold(f(0), f(1), f(2), ghost_row(s.v.closure().left, w));
    fold(f(m - 1), f(m - 2), f(m - 3), ghost_row(s.v.closure().right, w));

    DenseMatrix a = zeros(2 * (n + 1), 2 * (n + 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k <= n; ++k) {
            a[i][2 * k] = full[i][d(k + 1)];
            a[i][2 * k + 1] = full[i][f(k + 1)];
        }
    }
    return {std::move(a), std::move(b)};
}

}  // namespace oracle
