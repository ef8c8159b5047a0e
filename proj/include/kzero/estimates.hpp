#pragma once

#include <cmath>
#include <complex>

#include "kzero/airy.hpp"
#include "kzero/errors.hpp"
#include "kzero/gamma.hpp"
#include "kzero/types.hpp"

namespace kzero {

namespace detail {

inline constexpr double large_order_min_modulus = 5.0;
// Dispatch tolerance: a bootstrap head at modulus 5 must not re-enter the
// bootstrap branch after rounding.
inline constexpr double large_order_slack = 1e-9;

inline const Complex rot_m = std::exp(Complex(0.0, -2.0 * pi / 3.0));
inline const Complex rot_p = std::exp(Complex(0.0, 2.0 * pi / 3.0));
inline const double cbrt2 = std::cbrt(2.0);

inline void check_transition_args(Complex nu, int s) {
    if (s < 1 || s > 10) throw range_error("transition estimate: s must be in 1..10");
    if (std::abs(nu) < large_order_min_modulus - large_order_slack) {
        throw range_error("transition estimate: |nu| must be >= 5");
    }
}

} // namespace detail

// Crude small-order estimate: rho = -n*pi*Im(nu)/|nu|^2 + log 2 - gamma,
// phi = -n*pi*Re(nu)/|nu|^2.
inline SheetPoint small_nu_zero_crude(Complex nu, int n) {
    if (n < 1) throw range_error("zero label must be >= 1");
    const double m2 = std::norm(nu);
    if (m2 == 0.0) throw range_error("small-order estimate: nu must be nonzero");
    return SheetPoint{-n * pi * nu.imag() / m2 + std::log(2.0) - euler_gamma,
                      -n * pi * nu.real() / m2};
}

// Refined small-order estimate, from (z/2)^{2 nu} = e^{-2 n pi i} Gamma(1+nu)/Gamma(1-nu):
// w = log 2 + (-n pi i + (log_gamma(1+nu) - log_gamma(1-nu)) / 2) / nu.
inline SheetPoint small_nu_zero_refined(Complex nu, int n) {
    if (n < 1) throw range_error("zero label must be >= 1");
    if (std::norm(nu) == 0.0) throw range_error("small-order estimate: nu must be nonzero");
    const Complex lg = log_gamma(1.0 + nu) - log_gamma(1.0 - nu);
    const Complex c = (Complex(0.0, -n * pi) + 0.5 * lg) / nu;
    return SheetPoint{c.real() + std::log(2.0), c.imag()};
}

// Turning-point shift theta_s: z_s = e^{-i pi/2} (nu + theta_s nu^{1/3}).
// The alpha coefficients close the epsilon_s(nu) expansion through nu^{-8/3}.
inline Complex transition_theta(Complex nu, int s) {
    detail::check_transition_args(nu, s);
    const double a = airy_zero(s);
    const double a3 = a * a * a;
    const Complex al1 = -0.3 / detail::cbrt2 * detail::rot_m * (a * a);
    const Complex al2 = -(1.0 / 700.0) * detail::cbrt2 * detail::rot_p * (a3 + 10.0);
    const Complex al3 = Complex((1.0 / 126000.0) * a * (479.0 * a3 - 40.0), 0.0);
    const Complex al4 =
        (1.0 / 16170000.0) / detail::cbrt2 * detail::rot_m * (a * a) * (20231.0 * a3 + 55100.0);
    const Complex eps = al1 * std::pow(nu, -2.0 / 3.0) + al2 * std::pow(nu, -4.0 / 3.0) +
                        al3 * std::pow(nu, -2.0) + al4 * std::pow(nu, -8.0 / 3.0);
    return -1.0 / detail::cbrt2 * detail::rot_m * (a + eps);
}

// Unrotated transition-region zero nu + theta_s nu^{1/3}; where the
// corresponding Hankel-side zero sits before the -pi/2 rotation onto the K side.
inline Complex hankel_large_order_zero(Complex nu, int s) {
    return nu + transition_theta(nu, s) * std::pow(nu, 1.0 / 3.0);
}

// K-side transition-region zero. phi is the principal argument of the
// unrotated product shifted by -pi/2, continuous with the |nu| -> inf limit.
inline SheetPoint large_nu_zero(Complex nu, int s) {
    const Complex p = hankel_large_order_zero(nu, s);
    return SheetPoint{std::log(std::abs(p)), std::arg(p) - pi / 2.0};
}

// Order at which the Hankel function H^(1) has its s-th transition-region zero
// at argument z: six-term reversion in powers of z^{-2/3}.
inline Complex hankel_nu_zero(SheetPoint w, int s) {
    if (s < 1 || s > 10) throw range_error("reversion estimate: s must be in 1..10");
    const Complex z = w.z();
    if (std::abs(z) < 5.0) throw range_error("reversion estimate: |z| must be >= 5");
    const double a = airy_zero(s);
    const double a2 = a * a;
    const double a3 = a * a * a;
    const Complex c13 = std::pow(z, 1.0 / 3.0);
    return z + detail::rot_m / detail::cbrt2 * a * c13 +
           (1.0 / 60.0) * detail::cbrt2 * detail::rot_p * a2 / c13 -
           (1.0 / 700.0) * (a3 + 10.0) / z +
           (1.0 / 1134000.0) / detail::cbrt2 * detail::rot_m * a * (281.0 * a3 + 10440.0) /
               (z * c13 * c13) -
           (1.0 / 2619540000.0) * detail::cbrt2 * detail::rot_p * a2 * (73769.0 * a3 + 6624900.0) /
               (z * z * c13);
}

// Logarithmic deep-zero estimate, valid only for |z_n| well below |nu| and
// arg nu > 0: w = log 2 + Log nu - 1 - i (n - 1/4) pi / nu - i pi / 2, with phi
// accumulated from the explicit logarithm (no principal-value folding).
inline SheetPoint log_zero_estimate(Complex nu, int n) {
    if (n < 1) throw range_error("zero label must be >= 1");
    if (!(std::arg(nu) > 0.0)) {
        throw regime_error("logarithmic estimate requires arg nu > 0");
    }
    const Complex wc = std::log(2.0) + std::log(nu) +
                       (Complex(-1.0, 0.0) - Complex(0.0, (n - 0.25) * pi) / nu) -
                       Complex(0.0, pi / 2.0);
    const SheetPoint est{wc.real(), wc.imag()};
    if (!(std::exp(est.rho) < std::abs(nu) / 3.0)) {
        throw regime_error("logarithmic estimate outside its regime: |z| >= |nu|/3");
    }
    return est;
}

// True when log_zero_estimate would succeed.
inline bool log_zero_regime_ok(Complex nu, int n) {
    if (n < 1 || !(std::arg(nu) > 0.0)) return false;
    const Complex wc = std::log(2.0) + std::log(nu) +
                       (Complex(-1.0, 0.0) - Complex(0.0, (n - 0.25) * pi) / nu) -
                       Complex(0.0, pi / 2.0);
    return std::exp(wc.real()) < std::abs(nu) / 3.0;
}

} // namespace kzero
