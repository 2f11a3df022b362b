#pragma once

#include <numbers>
#include <string_view>

namespace gardner {

enum class BasisKind { Polynomial, Trigonometric };

[[nodiscard]] std::string_view to_string(BasisKind kind) noexcept;
/// Accepts "polynomial"/"poly" and "trigonometric"/"trig".
[[nodiscard]] BasisKind parse_basis_kind(std::string_view name);

/// Nodal values of a cubic B-spline expansion at a grid point x_i in terms
/// of the three coefficients that touch it:
///
///   U_i   = a1 d_{i-1} + a2 d_i + a1 d_{i+1}
///   U'_i  = b1 d_{i-1}          - b1 d_{i+1}
///   U''_i = g1 d_{i-1} + g2 d_i + g1 d_{i+1}
///
/// b1 is the slope of the left neighbour's spline at x_i, so U'_i above is
/// the actual derivative for both families.
struct NodalWeights {
    BasisKind kind = BasisKind::Polynomial;
    double h = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double b1 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
};

/// Largest admissible grid spacing for the trigonometric family (exclusive).
inline constexpr double kTrigonometricMaxSpacing = 2.0 * std::numbers::pi / 3.0;

/// Throws DomainError if h <= 0, or for the trigonometric family if h >= 2*pi/3.
[[nodiscard]] NodalWeights nodal_weights(BasisKind kind, double h);

/// Value of the B-spline centred at x_i on one of its four nonzero pieces.
/// Piece `segment` covers [x_{i-2+segment}, x_{i-1+segment}] and s in [0,1]
/// is the local coordinate inside it.
[[nodiscard]] double segment_value(BasisKind kind, double h, int segment, double s);

}  // namespace gardner
