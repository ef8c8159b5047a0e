#pragma once

#include <array>
#include <cmath>

#include "kzero/errors.hpp"
#include "kzero/types.hpp"

namespace kzero {

namespace detail {

// The Maclaurin sums below cancel heavily for x near -13 (terms reach ~4e10
// while the result is ~1e-1), so double accumulation would lose ~15 digits of
// the 1e-12 budget. Quad arithmetic keeps the truncation error near 1e-23.
using quad = __float128;

// Ai(0) and Ai'(0), each split hi + lo to preserve ~32 digits.
inline constexpr double ai0_hi = 0.3550280538878172;
inline constexpr double ai0_lo = 2.05233632436212e-17;
inline constexpr double aip0_hi = -0.2588194037928068;
inline constexpr double aip0_lo = 2.522243111610832e-17;

struct AiryEval {
    double ai;
    double aip;
};

inline AiryEval airy_eval(double x) {
    // Ai = Ai(0) f + Ai'(0) g with
    //   f = sum x^{3k} prod, term ratio x^3 / ((3k+2)(3k+3))
    //   g = sum x^{3k+1} prod, term ratio x^3 / ((3k+3)(3k+4))
    const quad xq = static_cast<quad>(x);
    const quad x3 = xq * xq * xq;
    quad f = 1.0, fd = 0.0;
    quad g = xq, gd = 1.0;
    quad tf = 1.0, tg = xq;
    for (int k = 0; k < 200; ++k) {
        const quad tf_next = tf * x3 / static_cast<quad>((3 * k + 2) * (3 * k + 3));
        const quad tg_next = tg * x3 / static_cast<quad>((3 * k + 3) * (3 * k + 4));
        f += tf_next;
        g += tg_next;
        fd += tf_next * static_cast<quad>(3 * k + 3) / xq;
        gd += tg_next * static_cast<quad>(3 * k + 4) / xq;
        const quad mag = (tf_next < 0 ? -tf_next : tf_next) + (tg_next < 0 ? -tg_next : tg_next);
        if (mag < static_cast<quad>(1e-30)) break;
        tf = tf_next;
        tg = tg_next;
    }
    const quad c1 = static_cast<quad>(ai0_hi) + static_cast<quad>(ai0_lo);
    const quad c2 = static_cast<quad>(aip0_hi) + static_cast<quad>(aip0_lo);
    return AiryEval{static_cast<double>(c1 * f + c2 * g),
                    static_cast<double>(c1 * fd + c2 * gd)};
}

inline void check_airy_range(double x) {
    if (!(std::abs(x) <= 13.0)) {
        throw range_error("airy: |x| must be <= 13");
    }
}

} // namespace detail

inline double airy_ai(double x) {
    detail::check_airy_range(x);
    if (x == 0.0) return detail::ai0_hi + detail::ai0_lo;
    return detail::airy_eval(x).ai;
}

inline double airy_ai_prime(double x) {
    detail::check_airy_range(x);
    if (x == 0.0) return detail::aip0_hi + detail::aip0_lo;
    return detail::airy_eval(x).aip;
}

// s-th negative zero of Ai, s = 1..10, Newton from the classical estimate.
inline double airy_zero(int s) {
    if (s < 1 || s > 10) throw range_error("airy_zero: s must be in 1..10");
    static const std::array<double, 10> table = [] {
        std::array<double, 10> t{};
        for (int i = 1; i <= 10; ++i) {
            double x = -std::pow(3.0 * pi * (4.0 * i - 1.0) / 8.0, 2.0 / 3.0);
            for (int it = 0; it < 50; ++it) {
                const detail::AiryEval e = detail::airy_eval(x);
                const double dx = e.ai / e.aip;
                x -= dx;
                if (std::abs(dx) < 1e-13) break;
            }
            t[static_cast<std::size_t>(i - 1)] = x;
        }
        return t;
    }();
    return table[static_cast<std::size_t>(s - 1)];
}

} // namespace kzero
