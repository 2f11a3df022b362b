#include "doctest.h"

#include <cmath>
#include <numbers>

#include "gardner/basis.hpp"
#include "gardner/errors.hpp"

using namespace gardner;

namespace {

// The full B-spline centred at 0 as a function of x, stitched from its pieces.
double spline(BasisKind kind, double h, double x) {
    const double u = x / h + 2.0;
    if (u <= 0.0 || u >= 4.0) return 0.0;
    const int seg = std::min(3, static_cast<int>(std::floor(u)));
    return segment_value(kind, h, seg, u - seg);
}

double d1(BasisKind kind, double h, double x) {
    const double e = 1e-5 * h;
    return (spline(kind, h, x + e) - spline(kind, h, x - e)) / (2.0 * e);
}

// The third derivative jumps at knots, so the plain second difference is only
// first order there; Richardson extrapolation removes that term.
double d2(BasisKind kind, double h, double x) {
    const auto diff2 = [&](double e) {
        return (spline(kind, h, x + e) - 2.0 * spline(kind, h, x) + spline(kind, h, x - e)) / (e * e);
    };
    const double e = 1e-3 * h;
    return 2.0 * diff2(e) - diff2(2.0 * e);
}

}  // namespace

TEST_CASE("polynomial weights at h = 0.5") {
    const auto w = nodal_weights(BasisKind::Polynomial, 0.5);
    CHECK(w.a1 == 1.0);
    CHECK(w.a2 == 4.0);
    CHECK(w.b1 == doctest::Approx(-6.0));
    CHECK(w.g1 == doctest::Approx(24.0));
    CHECK(w.g2 == doctest::Approx(-48.0));
    CHECK(2.0 * w.g1 + w.g2 == 0.0);
}

TEST_CASE("trigonometric weights reduce to the cardinal values as h shrinks") {
    const auto w = nodal_weights(BasisKind::Trigonometric, 1e-4);
    CHECK(w.a1 == doctest::Approx(1.0 / 6.0).epsilon(1e-8));
    CHECK(w.a2 == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
    CHECK(w.b1 * 1e-4 == doctest::Approx(-0.5).epsilon(1e-7));
    CHECK(w.g1 * 1e-8 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(w.g2 * 1e-8 == doctest::Approx(-2.0).epsilon(1e-6));
}

TEST_CASE("trigonometric partition of unity fails at second order in h") {
    // reference values from 30-digit quadrature-free evaluation
    auto w = nodal_weights(BasisKind::Trigonometric, 0.5);
    CHECK(2.0 * w.a1 + w.a2 == doctest::Approx(1.10050936614050917).epsilon(1e-14));
    CHECK(2.0 * w.g1 + w.g2 == doctest::Approx(-0.0130321328798631745).epsilon(1e-10));
    w = nodal_weights(BasisKind::Trigonometric, 0.25);
    CHECK(2.0 * w.a1 + w.a2 == doctest::Approx(1.02384037449198758).epsilon(1e-14));
    for (double h = 0.01; h <= 1.0; h += 0.01) {
        const auto wh = nodal_weights(BasisKind::Trigonometric, h);
        CHECK(std::abs(2.0 * wh.a1 + wh.a2 - 1.0) <= 0.6 * h * h);
    }
}

TEST_CASE("nodal weights agree with the pieces and their derivatives") {
    for (BasisKind kind : {BasisKind::Polynomial, BasisKind::Trigonometric}) {
        for (double h : {0.05, 0.1, 0.3, 0.5, 1.0, 2.0}) {
            if (kind == BasisKind::Trigonometric && h >= kTrigonometricMaxSpacing) continue;
            CAPTURE(h);
            const auto w = nodal_weights(kind, h);
            CHECK(spline(kind, h, 0.0) == doctest::Approx(w.a2).epsilon(1e-12));
            CHECK(spline(kind, h, h) == doctest::Approx(w.a1).epsilon(1e-12));
            CHECK(spline(kind, h, -h) == doctest::Approx(w.a1).epsilon(1e-12));
            CHECK(d1(kind, h, h) == doctest::Approx(w.b1).epsilon(1e-7));
            CHECK(d1(kind, h, -h) == doctest::Approx(-w.b1).epsilon(1e-7));
            CHECK(d1(kind, h, 0.0) == doctest::Approx(0.0).scale(std::abs(w.b1)).epsilon(1e-8));
            CHECK(d2(kind, h, 0.0) == doctest::Approx(w.g2).epsilon(1e-5));
            CHECK(d2(kind, h, h) == doctest::Approx(w.g1).epsilon(1e-5));
        }
    }
}

TEST_CASE("pieces join with matching value and slope") {
    for (BasisKind kind : {BasisKind::Polynomial, BasisKind::Trigonometric}) {
        const double h = 0.4;
        CHECK(segment_value(kind, h, 0, 0.0) == doctest::Approx(0.0).scale(1.0));
        CHECK(segment_value(kind, h, 3, 1.0) == doctest::Approx(0.0).scale(1.0));
        for (int seg = 0; seg < 3; ++seg) {
            CHECK(segment_value(kind, h, seg, 1.0) ==
                  doctest::Approx(segment_value(kind, h, seg + 1, 0.0)).epsilon(1e-12));
        }
        for (double x : {-2 * h, -h, 0.0, h, 2 * h}) {
            const double e = 1e-7 * h;
            const double left = (spline(kind, h, x) - spline(kind, h, x - e)) / e;
            const double right = (spline(kind, h, x + e) - spline(kind, h, x)) / e;
            CHECK(left == doctest::Approx(right).scale(1.0 / h).epsilon(1e-5));
        }
    }
}

TEST_CASE("polynomial pieces are the standard cubic spline") {
    CHECK(segment_value(BasisKind::Polynomial, 1.0, 0, 0.5) == doctest::Approx(0.125));
    CHECK(segment_value(BasisKind::Polynomial, 1.0, 1, 1.0) == doctest::Approx(4.0));
    CHECK(segment_value(BasisKind::Polynomial, 1.0, 1, 0.5) == doctest::Approx(2.875));
    CHECK(segment_value(BasisKind::Polynomial, 1.0, 2, 0.5) == doctest::Approx(2.875));
    CHECK(segment_value(BasisKind::Polynomial, 1.0, 3, 0.5) == doctest::Approx(0.125));
}

TEST_CASE("spacing and segment arguments are checked") {
    CHECK_THROWS_AS((void)nodal_weights(BasisKind::Polynomial, 0.0), DomainError);
    CHECK_THROWS_AS((void)nodal_weights(BasisKind::Polynomial, -1.0), DomainError);
    CHECK_THROWS_AS((void)nodal_weights(BasisKind::Trigonometric, 2.0 * std::numbers::pi / 3.0),
                    DomainError);
    CHECK_NOTHROW((void)nodal_weights(BasisKind::Trigonometric, 2.0));
    CHECK_THROWS_AS((void)segment_value(BasisKind::Polynomial, 1.0, 4, 0.5), DomainError);
    CHECK_THROWS_AS((void)segment_value(BasisKind::Polynomial, 1.0, -1, 0.5), DomainError);
    CHECK_THROWS_AS((void)segment_value(BasisKind::Trigonometric, 0.5, 0, 1.5), DomainError);
}

TEST_CASE("basis names round-trip") {
    CHECK(parse_basis_kind("poly") == BasisKind::Polynomial);
    CHECK(parse_basis_kind("trigonometric") == BasisKind::Trigonometric);
    CHECK(parse_basis_kind(to_string(BasisKind::Trigonometric)) == BasisKind::Trigonometric);
    CHECK_THROWS_AS((void)parse_basis_kind("quintic"), ConfigError);
}
