#pragma once

#include <cstddef>
#include <memory>
#include <random>
#include <vector>

#include "gardner/grid_field.hpp"
#include "gardner/stepper.hpp"

namespace testing_support {

inline std::vector<double> sample(const gardner::Grid& g, auto&& fn) {
    std::vector<double> out;
    out.reserve(g.n() + 1);
    for (double x : g.nodes()) out.push_back(fn(x));
    return out;
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                         double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs(const std::vector<double>& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

// State with random interior coefficients on [0, 1].
inline gardner::State random_state(std::mt19937_64& rng, std::size_t n, gardner::BasisKind kind,
                                   gardner::FieldClosures closures, double scale = 0.5) {
    auto grid = std::make_shared<const gardner::Grid>(0.0, 1.0, n);
    const auto w = gardner::nodal_weights(kind, grid->h());
    gardner::SplineField u(grid, w, closures.u);
    gardner::SplineField v(grid, w, closures.v);
    u.set_interior(random_vector(rng, n + 1, -scale, scale));
    v.set_interior(random_vector(rng, n + 1, -scale, scale));
    return {0.0, std::move(u), std::move(v)};
}

}  // namespace testing_support
