#include "gardner/grid_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gardner/banded.hpp"
#include "gardner/errors.hpp"

namespace gardner {

Grid::Grid(double a, double b, std::size_t n) : a_(a), b_(b), n_(n), h_(0.0) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("grid interval must satisfy a < b");
    }
    if (n < 2) throw DomainError("grid needs at least two subintervals");
    h_ = (b - a) / static_cast<double>(n);
    nodes_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) nodes_[i] = a + static_cast<double>(i) * h_;
    nodes_[n] = b;
}

std::string_view to_string(Closure c) noexcept {
    return c == Closure::Neumann1 ? "neumann1" : "neumann2";
}

Closure parse_closure(std::string_view name) {
    if (name == "neumann1" || name == "n1") return Closure::Neumann1;
    if (name == "neumann2" || name == "n2") return Closure::Neumann2;
    throw ConfigError("unknown closure '" + std::string(name) + "'");
}

GhostRule eliminate_ghosts(Closure closure, const NodalWeights& w) {
    if (closure == Closure::Neumann1) {
        // b1 d_{-1} - b1 d_1 = 0
        return {0.0, 1.0};
    }
    // g1 d_{-1} + g2 d_0 + g1 d_1 = 0
    if (w.g1 == 0.0) throw DomainError("second-derivative weight g1 is zero");
    return {-w.g2 / w.g1, -1.0};
}

SplineField::SplineField(std::shared_ptr<const Grid> grid, NodalWeights weights,
                         BoundaryClosure closure)
    : grid_(std::move(grid)), weights_(weights), closure_(closure) {
    if (!grid_) throw DomainError("spline field requires a grid");
    left_ = eliminate_ghosts(closure_.left, weights_);
    right_ = eliminate_ghosts(closure_.right, weights_);
    coeffs_.assign(grid_->n() + 3, 0.0);
}

void SplineField::set_interior(std::span<const double> values) {
    if (values.size() != grid_->n() + 1) {
        throw DomainError("set_interior: expected " + std::to_string(grid_->n() + 1) + " values");
    }
    std::copy(values.begin(), values.end(), coeffs_.begin() + 1);
    refresh_ghosts();
}

void SplineField::refresh_ghosts() noexcept {
    const std::size_t n = grid_->n();
    coeffs_[0] = left_.c0 * coeffs_[1] + left_.c1 * coeffs_[2];
    coeffs_[n + 2] = right_.c0 * coeffs_[n + 1] + right_.c1 * coeffs_[n];
}

namespace {

template <typename Stencil>
std::vector<double> apply_stencil(const SplineField& field, Stencil stencil) {
    const auto d = field.coeffs();
    const std::size_t n = field.grid().n();
    std::vector<double> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = stencil(d[i], d[i + 1], d[i + 2]);
    return out;
}

}  // namespace

std::vector<double> nodal_values(const SplineField& field) {
    const auto& w = field.weights();
    return apply_stencil(field, [&w](double l, double c, double r) {
        return w.a1 * l + w.a2 * c + w.a1 * r;
    });
}

std::vector<double> nodal_first_derivs(const SplineField& field) {
    const auto& w = field.weights();
    return apply_stencil(field, [&w](double l, double, double r) { return w.b1 * l - w.b1 * r; });
}

std::vector<double> nodal_second_derivs(const SplineField& field) {
    const auto& w = field.weights();
    return apply_stencil(field, [&w](double l, double c, double r) {
        return w.g1 * l + w.g2 * c + w.g1 * r;
    });
}

SplineField interpolate(std::span<const double> samples, std::shared_ptr<const Grid> grid,
                        const NodalWeights& weights, BoundaryClosure closure) {
    SplineField field(std::move(grid), weights, closure);
    const std::size_t n = field.grid().n();
    if (samples.size() != n + 1) throw DomainError("interpolate: expected one sample per node");

    const GhostRule left = field.left_rule();
    const GhostRule right = field.right_rule();
    BandedMatrix m(n + 1, 1, 1);
    for (std::size_t i = 0; i <= n; ++i) {
        m.add(i, i, weights.a2);
        if (i > 0) {
            m.add(i, i - 1, weights.a1);
        } else {
            m.add(0, 0, weights.a1 * left.c0);
            m.add(0, 1, weights.a1 * left.c1);
        }
        if (i < n) {
            m.add(i, i + 1, weights.a1);
        } else {
            m.add(n, n, weights.a1 * right.c0);
            m.add(n, n - 1, weights.a1 * right.c1);
        }
    }
    field.set_interior(solve(m, samples));
    return field;
}

double evaluate_at(const SplineField& field, double x) {
    const Grid& g = field.grid();
    if (!(x >= g.a() && x <= g.b())) throw DomainError("evaluate_at: x outside [a, b]");
    const std::size_t n = g.n();
    const double t = (x - g.a()) / g.h();
    std::size_t cell = std::min(n - 1, static_cast<std::size_t>(std::floor(t)));
    const double s = std::clamp(t - static_cast<double>(cell), 0.0, 1.0);

    // On cell [x_i, x_{i+1}] the splines centred at x_{i-1}..x_{i+2} are live,
    // each on its piece 3, 2, 1, 0 respectively. coeffs()[k] holds d_{k-1}.
    const auto d = field.coeffs();
    const auto& w = field.weights();
    double value = 0.0;
    for (int k = 0; k < 4; ++k) {
        value += d[cell + static_cast<std::size_t>(k)] * segment_value(w.kind, w.h, 3 - k, s);
    }
    return value;
}

}  // namespace gardner
