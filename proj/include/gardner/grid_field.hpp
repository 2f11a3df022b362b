#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "gardner/basis.hpp"

namespace gardner {

/// Uniform partition a = x_0 < x_1 < ... < x_N = b.
class Grid {
public:
    /// Throws DomainError unless a < b and n >= 2.
    Grid(double a, double b, std::size_t n);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] double h() const noexcept { return h_; }
    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    [[nodiscard]] double node(std::size_t i) const noexcept { return nodes_[i]; }

private:
    double a_;
    double b_;
    std::size_t n_;
    double h_;
    std::vector<double> nodes_;
};

/// Homogeneous Neumann condition imposed at one end of the interval.
enum class Closure {
    Neumann1,  // first derivative vanishes
    Neumann2,  // second derivative vanishes
};

[[nodiscard]] std::string_view to_string(Closure c) noexcept;
/// Accepts "neumann1"/"n1" and "neumann2"/"n2".
[[nodiscard]] Closure parse_closure(std::string_view name);

struct BoundaryClosure {
    Closure left = Closure::Neumann1;
    Closure right = Closure::Neumann1;

    static constexpr BoundaryClosure both(Closure c) noexcept { return {c, c}; }
    friend bool operator==(const BoundaryClosure&, const BoundaryClosure&) = default;
};

/// Ghost coefficient as a combination of the two nearest interior ones:
/// d_{-1} = c0 d_0 + c1 d_1 on the left, d_{N+1} = c0 d_N + c1 d_{N-1} on the right.
struct GhostRule {
    double c0 = 0.0;
    double c1 = 0.0;
};

[[nodiscard]] GhostRule eliminate_ghosts(Closure closure, const NodalWeights& w);

/// Coefficients d_{-1}..d_{N+1} of a cubic B-spline expansion on a grid.
///
/// The two ghost coefficients always satisfy the boundary closure: every
/// mutation goes through set_interior(), which recomputes them.
class SplineField {
public:
    /// Zero field.
    SplineField(std::shared_ptr<const Grid> grid, NodalWeights weights, BoundaryClosure closure);

    [[nodiscard]] const Grid& grid() const noexcept { return *grid_; }
    [[nodiscard]] const std::shared_ptr<const Grid>& grid_ptr() const noexcept { return grid_; }
    [[nodiscard]] const NodalWeights& weights() const noexcept { return weights_; }
    [[nodiscard]] const BoundaryClosure& closure() const noexcept { return closure_; }

    /// All N+3 coefficients, ghosts included; index k holds d_{k-1}.
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
    /// d_i for i in -1..N+1.
    [[nodiscard]] double coeff(std::ptrdiff_t i) const noexcept {
        return coeffs_[static_cast<std::size_t>(i + 1)];
    }
    /// Interior d_0..d_N.
    [[nodiscard]] std::span<const double> interior() const noexcept {
        return std::span<const double>(coeffs_).subspan(1, grid_->n() + 1);
    }

    /// Replaces d_0..d_N and refreshes the ghosts. Throws DomainError on size mismatch.
    void set_interior(std::span<const double> values);

    [[nodiscard]] GhostRule left_rule() const noexcept { return left_; }
    [[nodiscard]] GhostRule right_rule() const noexcept { return right_; }

private:
    void refresh_ghosts() noexcept;

    std::shared_ptr<const Grid> grid_;
    NodalWeights weights_;
    BoundaryClosure closure_;
    GhostRule left_;
    GhostRule right_;
    std::vector<double> coeffs_;
};

[[nodiscard]] std::vector<double> nodal_values(const SplineField& field);
[[nodiscard]] std::vector<double> nodal_first_derivs(const SplineField& field);
[[nodiscard]] std::vector<double> nodal_second_derivs(const SplineField& field);

/// Spline whose nodal values reproduce `samples` and whose ghosts satisfy the
/// closure. Solves the tridiagonal system left after ghost elimination.
[[nodiscard]] SplineField interpolate(std::span<const double> samples,
                                      std::shared_ptr<const Grid> grid,
                                      const NodalWeights& weights, BoundaryClosure closure);

/// Value of the expansion at any x in [a, b]. Throws DomainError outside.
[[nodiscard]] double evaluate_at(const SplineField& field, double x);

}  // namespace gardner
