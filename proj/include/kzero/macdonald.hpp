#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "kzero/errors.hpp"
#include "kzero/gamma.hpp"
#include "kzero/types.hpp"

namespace kzero {

namespace detail {

inline constexpr double series_rel_cutoff = 1e-18;
inline constexpr int series_max_terms = 100;

inline void check_pochhammer(Complex c) {
    // (c)_k vanishes for some k iff c is a non-positive integer.
    const double nearest = std::round(c.real());
    if (nearest <= 0.0 && std::abs(c.real() - nearest) <= 1e-12 &&
        std::abs(c.imag()) <= 1e-12) {
        throw pole_error("ascending series: Pochhammer denominator vanishes");
    }
}

inline void check_noninteger_order(Complex nu) {
    const double nearest = std::round(nu.real());
    if (std::abs(nu.real() - nearest) <= 1e-8 && std::abs(nu.imag()) <= 1e-8) {
        throw integer_order_error("order within 1e-8 of a real integer");
    }
}

// Sum_k (z^2/4)^k / (k! (c)_k) with c = 1 - sign*nu, plus the w-derivative
// d/dw = Sum_k 2k * term_k. z^2/4 enters as exp(2w)/4 so the sum is
// single-valued on the log surface.
struct SeriesEval {
    Complex sum;
    Complex dsum_dw;
    int terms_used;
    bool truncation_ok;
};

inline SeriesEval ascending_series_eval(int sign, Complex nu, SheetPoint w) {
    const Complex c = 1.0 - static_cast<double>(sign) * nu;
    check_pochhammer(c);
    const Complex z2over4 = std::exp(2.0 * w.w()) / 4.0;
    Complex term = 1.0;
    Complex sum = 1.0;
    Complex dsum = 0.0;
    for (int k = 1; k < series_max_terms; ++k) {
        term *= z2over4 / (static_cast<double>(k) * (c + static_cast<double>(k - 1)));
        sum += term;
        dsum += 2.0 * static_cast<double>(k) * term;
        if (std::abs(term) < series_rel_cutoff * std::abs(sum)) {
            return SeriesEval{sum, dsum, k + 1, true};
        }
    }
    return SeriesEval{sum, dsum, series_max_terms, false};
}

} // namespace detail

// sign +1 pairs with the (z/2)^{-nu} half of K, sign -1 with (z/2)^{+nu}.
inline SeriesResult ascending_series(int sign, Complex nu, SheetPoint w) {
    const detail::SeriesEval e = detail::ascending_series_eval(sign, nu, w);
    return SeriesResult{e.sum, e.terms_used, e.truncation_ok};
}

// The two addends of K (prefactor excluded): K = (pi/2)/sin(nu*pi) * (first - second).
inline std::pair<Complex, Complex> macdonald_k_parts(Complex nu, SheetPoint w) {
    detail::check_noninteger_order(nu);
    const Complex wml2 = w.w() - std::log(2.0);
    const Complex t1 =
        std::exp(-nu * wml2 - log_gamma(1.0 - nu)) * detail::ascending_series_eval(+1, nu, w).sum;
    const Complex t2 =
        std::exp(nu * wml2 - log_gamma(1.0 + nu)) * detail::ascending_series_eval(-1, nu, w).sum;
    return {t1, t2};
}

inline Complex macdonald_k(Complex nu, SheetPoint w) {
    const auto [t1, t2] = macdonald_k_parts(nu, w);
    return (pi / 2.0) / std::sin(nu * pi) * (t1 - t2);
}

// Zero residual: E = A - (z/2)^{2 nu} * Gamma(1-nu)/Gamma(1+nu) * B, where A is
// the (1-nu)_k series and B the (1+nu)_k one. E and K share zeros, and E is
// analytic in w, so dE/dw is the Newton derivative: each series term gains a
// factor 2k and the power prefactor gains 2 nu.
struct ResidualEval {
    Complex value;
    Complex d_dw;
    SeriesResult series_minus_nu; // (1-nu)_k side
    SeriesResult series_plus_nu;  // (1+nu)_k side
};

inline ResidualEval zero_residual(Complex nu, SheetPoint w) {
    detail::check_noninteger_order(nu);
    const detail::SeriesEval sm = detail::ascending_series_eval(+1, nu, w);
    const detail::SeriesEval sp = detail::ascending_series_eval(-1, nu, w);
    const Complex gr = std::exp(log_gamma(1.0 - nu) - log_gamma(1.0 + nu));
    const Complex pref = std::exp(2.0 * nu * (w.w() - std::log(2.0)));
    ResidualEval r;
    r.value = sm.sum - pref * gr * sp.sum;
    r.d_dw = sm.dsum_dw - pref * gr * (2.0 * nu * sp.sum + sp.dsum_dw);
    r.series_minus_nu = SeriesResult{sm.sum, sm.terms_used, sm.truncation_ok};
    r.series_plus_nu = SeriesResult{sp.sum, sp.terms_used, sp.truncation_ok};
    return r;
}

} // namespace kzero
