#include "gardner/basis.hpp"

#include <cmath>
#include <string>

#include "gardner/errors.hpp"

namespace gardner {

std::string_view to_string(BasisKind kind) noexcept {
    return kind == BasisKind::Polynomial ? "polynomial" : "trigonometric";
}

BasisKind parse_basis_kind(std::string_view name) {
    if (name == "polynomial" || name == "poly") return BasisKind::Polynomial;
    if (name == "trigonometric" || name == "trig") return BasisKind::Trigonometric;
    throw ConfigError("unknown basis '" + std::string(name) + "'");
}

namespace {

void check_spacing(BasisKind kind, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("grid spacing must be positive and finite");
    }
    if (kind == BasisKind::Trigonometric && h >= kTrigonometricMaxSpacing) {
        throw DomainError("trigonometric B-splines require h < 2*pi/3");
    }
}

}  // namespace

NodalWeights nodal_weights(BasisKind kind, double h) {
    check_spacing(kind, h);
    NodalWeights w;
    w.kind = kind;
    w.h = h;
    if (kind == BasisKind::Polynomial) {
        w.a1 = 1.0;
        w.a2 = 4.0;
        w.b1 = -3.0 / h;
        w.g1 = 6.0 / (h * h);
        w.g2 = -12.0 / (h * h);
        return w;
    }
    const double s_half = std::sin(0.5 * h);
    const double s_one = std::sin(h);
    const double s_three_half = std::sin(1.5 * h);
    const double c_half = std::cos(0.5 * h);
    const double c_one = std::cos(h);
    const double c_three_half = std::cos(1.5 * h);
    const double cot_half = c_half / s_half;

    w.a1 = s_half * s_half / (s_one * s_three_half);
    w.a2 = 2.0 / (1.0 + 2.0 * c_one);
    w.b1 = -0.75 / s_three_half;
    w.g1 = 3.0 * (1.0 + 3.0 * c_one) / (s_half * s_half) / (16.0 * (2.0 * c_half + c_three_half));
    w.g2 = -3.0 * cot_half * cot_half / (2.0 + 4.0 * c_one);
    return w;
}

double segment_value(BasisKind kind, double h, int segment, double s) {
    check_spacing(kind, h);
    if (segment < 0 || segment > 3) throw DomainError("segment must be in 0..3");
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("local coordinate must be in [0,1]");

    if (kind == BasisKind::Polynomial) {
        const double r = 1.0 - s;
        switch (segment) {
            case 0: return s * s * s;
            case 1: return 1.0 + 3.0 * s + 3.0 * s * s - 3.0 * s * s * s;
            case 2: return 1.0 + 3.0 * r + 3.0 * r * r - 3.0 * r * r * r;
            default: return r * r * r;
        }
    }

    // Spline centred at 0 with knots -2h..2h.
    const double x = (segment - 2 + s) * h;
    auto z = [x](double knot) { return std::sin(0.5 * (x - knot)); };
    auto zhat = [x](double knot) { return std::sin(0.5 * (knot - x)); };
    const double km2 = -2.0 * h, km1 = -h, k0 = 0.0, kp1 = h, kp2 = 2.0 * h;
    const double scale = std::sin(0.5 * h) * std::sin(h) * std::sin(1.5 * h);

    double v = 0.0;
    switch (segment) {
        case 0:
            v = std::pow(z(km2), 3);
            break;
        case 1:
            v = z(km2) * (z(km2) * zhat(k0) + zhat(kp1) * z(km1)) + zhat(kp2) * z(km1) * z(km1);
            break;
        case 2:
            v = z(km2) * zhat(kp1) * zhat(kp1) + zhat(kp2) * (z(km1) * zhat(kp1) + zhat(kp2) * z(k0));
            break;
        default:
            v = std::pow(zhat(kp2), 3);
            break;
    }
    return v / scale;
}

}  // namespace gardner
