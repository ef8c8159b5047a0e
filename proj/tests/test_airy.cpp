#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "kzero/airy.hpp"
#include "kzero/errors.hpp"
#include "oracles.hpp"

using namespace kzero;

TEST_CASE("airy function matches reference values", "[airy]") {
    CHECK(airy_ai(-1.0) == Catch::Approx(oracle::ai_m1).epsilon(1e-14));
    CHECK(airy_ai(-5.0) == Catch::Approx(oracle::ai_m5).epsilon(1e-14));
    CHECK(airy_ai(2.5) == Catch::Approx(oracle::ai_25).epsilon(1e-14));
    CHECK(airy_ai_prime(-1.0) == Catch::Approx(oracle::aip_m1).epsilon(1e-12));
    CHECK(airy_ai_prime(2.5) == Catch::Approx(oracle::aip_25).epsilon(1e-13));

    // Ai(0) = 3^{-2/3} / Gamma(2/3)
    const double ai0 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
    CHECK(airy_ai(0.0) == Catch::Approx(ai0).epsilon(1e-15));
}

TEST_CASE("airy function satisfies its differential equation", "[airy]") {
    // Ai'' = x Ai via a central difference of Ai'
    const double h = 1e-5;
    for (double x : {-9.0, -4.2, -1.0, 0.3, 2.0, 6.5}) {
        const double second = (airy_ai_prime(x + h) - airy_ai_prime(x - h)) / (2.0 * h);
        CHECK(second == Catch::Approx(x * airy_ai(x)).margin(1e-7));
    }
}

TEST_CASE("airy zeros match reference values and are actual zeros", "[airy]") {
    for (int s = 1; s <= 10; ++s) {
        const double a = airy_zero(s);
        CHECK(a == Catch::Approx(oracle::airy_zeros[s - 1]).margin(1e-12));
        CHECK(std::abs(airy_ai(a)) < 1e-13);
    }
}

TEST_CASE("airy zeros decrease and the slope alternates", "[airy]") {
    for (int s = 1; s <= 9; ++s) {
        CHECK(airy_zero(s + 1) < airy_zero(s));
    }
    // Ai rises through its first zero coming from the right, then alternates
    for (int s = 1; s <= 10; ++s) {
        const double slope = airy_ai_prime(airy_zero(s));
        CHECK(slope * ((s % 2 == 1) ? 1.0 : -1.0) > 0.0);
    }
}

TEST_CASE("airy evaluation rejects arguments outside its validated range", "[airy]") {
    CHECK_THROWS_AS(airy_ai(13.5), range_error);
    CHECK_THROWS_AS(airy_ai(-13.5), range_error);
    CHECK_THROWS_AS(airy_ai_prime(-200.0), range_error);
    CHECK_NOTHROW(airy_ai(12.9));
    CHECK_THROWS_AS(airy_zero(0), range_error);
    CHECK_THROWS_AS(airy_zero(11), range_error);
}
