#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace kzero {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = 0.57721566490153286061;

// Point on the log surface: z = exp(rho + i*phi), phi unbounded.
// Sheet bands are half-open at the top: sheet k holds (2k-1)*pi < phi <= (2k+1)*pi,
// so the principal sheet (k = 0) is -pi < phi <= pi.
struct SheetPoint {
    double rho = 0.0;
    double phi = 0.0;

    Complex w() const { return Complex(rho, phi); }
    Complex z() const { return std::exp(Complex(rho, phi)); }
    int sheet_index() const {
        return static_cast<int>(std::ceil((phi - pi) / (2.0 * pi)));
    }
};

inline SheetPoint sheet_point(Complex w) { return SheetPoint{w.real(), w.imag()}; }

// Principal-sheet lift of a nonzero complex number.
inline SheetPoint sheet_point_from_z(Complex z) {
    return SheetPoint{std::log(std::abs(z)), std::arg(z)};
}

// nu folded into the closed first quadrant by at most one negation
// (K_{-nu} = K_nu) and one conjugation (zeros conjugate with nu).
struct Order {
    Complex nu;
    Complex canonical;
    bool negate_applied = false;
    bool conj_applied = false;
};

inline Order canonicalize(Complex nu) {
    Order o;
    o.nu = nu;
    Complex c = nu;
    if (c.real() < 0.0 || (c.real() == 0.0 && c.imag() < 0.0)) {
        c = -c;
        o.negate_applied = true;
    }
    if (c.imag() < 0.0) {
        c = std::conj(c);
        o.conj_applied = true;
    }
    o.canonical = c;
    return o;
}

// One ascending-series evaluation. truncation_ok means the running term
// dropped below 1e-18 of the partial sum before the 100-term cap.
struct SeriesResult {
    Complex value;
    int terms_used = 0;
    bool truncation_ok = true;
};

} // namespace kzero
