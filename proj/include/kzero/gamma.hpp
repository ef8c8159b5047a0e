#pragma once

#include <cmath>
#include <complex>

#include "kzero/errors.hpp"
#include "kzero/types.hpp"

namespace kzero {

namespace detail {

// Lanczos g = 7, 9 coefficients; ~1e-13 relative accuracy of exp(log_gamma)
// for |zeta| <= 60 after reflection.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

inline Complex log_gamma_positive(Complex zeta) {
    // Valid for Re zeta >= 0.5.
    const Complex x = zeta - 1.0;
    Complex acc = lanczos_c[0];
    for (int i = 1; i < 9; ++i) acc += lanczos_c[i] / (x + static_cast<double>(i));
    const Complex t = x + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (x + 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace detail

// Principal-strip log Gamma. Branch is continuous where the library needs it;
// callers that only form exp(...) are insensitive to the residual 2*pi*i ambiguity
// on the reflected side.
inline Complex log_gamma(Complex zeta) {
    const double nearest = std::round(zeta.real());
    if (nearest <= 0.0 && std::abs(zeta.real() - nearest) <= 1e-12 &&
        std::abs(zeta.imag()) <= 1e-12) {
        throw pole_error("log_gamma: pole at non-positive integer");
    }
    if (zeta.real() >= 0.5) return detail::log_gamma_positive(zeta);
    // Reflection: Gamma(zeta) * Gamma(1 - zeta) = pi / sin(pi * zeta).
    return std::log(pi) - std::log(std::sin(pi * zeta)) -
           detail::log_gamma_positive(1.0 - zeta);
}

// Gamma(1 + nu) / Gamma(1 - nu).
inline Complex gamma_ratio(Complex nu) {
    return std::exp(log_gamma(1.0 + nu) - log_gamma(1.0 - nu));
}

} // namespace kzero
