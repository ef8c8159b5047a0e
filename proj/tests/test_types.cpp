#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "kzero/types.hpp"

using namespace kzero;

TEST_CASE("sheet point maps to z through the exponential", "[types]") {
    CHECK(SheetPoint{0.0, 0.0}.z() == Complex(1.0, 0.0));

    const SheetPoint p{std::log(2.0), pi};
    CHECK(std::abs(p.z() - Complex(-2.0, 0.0)) < 1e-15);

    // two full turns leave z unchanged but not the point
    const SheetPoint q{std::log(2.0), pi + 4.0 * pi};
    CHECK(std::abs(q.z() - p.z()) < 1e-14);
    CHECK(q.phi != p.phi);
}

TEST_CASE("sheet index bands are (2k-1)pi < phi <= (2k+1)pi", "[types]") {
    CHECK(SheetPoint{0.0, 0.0}.sheet_index() == 0);
    CHECK(SheetPoint{0.0, pi}.sheet_index() == 0);
    CHECK(SheetPoint{0.0, pi + 1e-9}.sheet_index() == 1);
    CHECK(SheetPoint{0.0, -pi}.sheet_index() == -1);
    CHECK(SheetPoint{0.0, -pi + 1e-9}.sheet_index() == 0);
    CHECK(SheetPoint{0.0, 3.0 * pi}.sheet_index() == 1);
    CHECK(SheetPoint{0.0, -3.0 * pi}.sheet_index() == -2);
    CHECK(SheetPoint{1.7, 2.0 * pi}.sheet_index() == 1);
}

TEST_CASE("sheet point round trips through its complex form", "[types]") {
    const SheetPoint p{-0.3, 7.25};
    const SheetPoint q = sheet_point(p.w());
    CHECK(q.rho == p.rho);
    CHECK(q.phi == p.phi);
}

TEST_CASE("sheet point from z uses the principal argument", "[types]") {
    const SheetPoint p = sheet_point_from_z(Complex(1.0, 1.0));
    CHECK(p.rho == Catch::Approx(0.5 * std::log(2.0)).margin(1e-15));
    CHECK(p.phi == Catch::Approx(pi / 4.0).margin(1e-15));
    CHECK(sheet_point_from_z(Complex(-2.0, 0.0)).phi == Catch::Approx(pi).margin(1e-15));
}

TEST_CASE("canonical order lands in the closed first quadrant", "[types]") {
    SECTION("already canonical") {
        const Order o = canonicalize(Complex(0.3, 0.2));
        CHECK(o.canonical == Complex(0.3, 0.2));
        CHECK_FALSE(o.negate_applied);
        CHECK_FALSE(o.conj_applied);
    }
    SECTION("negative real part flips sign first") {
        const Order o = canonicalize(Complex(-0.3, 0.2));
        CHECK(o.canonical == Complex(0.3, 0.2));
        CHECK(o.negate_applied);
        CHECK(o.conj_applied);
    }
    SECTION("lower half-plane conjugates") {
        const Order o = canonicalize(Complex(0.3, -0.2));
        CHECK(o.canonical == Complex(0.3, 0.2));
        CHECK_FALSE(o.negate_applied);
        CHECK(o.conj_applied);
    }
    SECTION("negative imaginary axis negates") {
        const Order o = canonicalize(Complex(0.0, -2.0));
        CHECK(o.canonical == Complex(0.0, 2.0));
        CHECK(o.negate_applied);
        CHECK_FALSE(o.conj_applied);
    }
    SECTION("real order is untouched") {
        const Order o = canonicalize(Complex(2.5, 0.0));
        CHECK(o.canonical == Complex(2.5, 0.0));
        CHECK_FALSE(o.negate_applied);
        CHECK_FALSE(o.conj_applied);
    }
}
