#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "kzero/estimates.hpp"
#include "kzero/macdonald.hpp"
#include "kzero/types.hpp"

namespace kzero {

struct ZeroRecord {
    int label = 0;
    Complex nu;
    SheetPoint w;
    Complex z;
    double residual_abs = 0.0;
    int iterations = 0;
    bool converged = false;
    int sheet_index = 0;
};

// One Newton iterate, kept for replay output and convergence-rate checks.
struct IterationStep {
    SheetPoint w;
    Complex residual;
};

namespace detail {

inline ZeroRecord make_record(int label, Complex nu, SheetPoint w, double residual_abs,
                              int iterations, bool converged) {
    ZeroRecord r;
    r.label = label;
    r.nu = nu;
    r.w = w;
    r.z = w.z();
    r.residual_abs = residual_abs;
    r.iterations = iterations;
    r.converged = converged;
    r.sheet_index = w.sheet_index();
    return r;
}

} // namespace detail

// Damped Newton on E in the w-plane. phi is never folded, so the iterate stays
// on the sheet the seed selected. The step is halved (up to 8 times) while the
// residual magnitude fails to decrease; the seed two rings out from the third
// reference block needs that to stay in its basin.
inline ZeroRecord refine_zero(Complex nu, SheetPoint seed, int max_iter = 30,
                              double tol = 1e-10, std::vector<IterationStep>* steps = nullptr) {
    Complex w = seed.w();
    ResidualEval r = zero_residual(nu, sheet_point(w));
    if (steps) steps->push_back(IterationStep{sheet_point(w), r.value});
    int it = 0;
    bool converged = false;
    for (; it < max_iter; ++it) {
        if (std::abs(r.value) < tol) {
            converged = true;
            break;
        }
        if (!std::isfinite(std::abs(r.value)) || !std::isfinite(std::abs(r.d_dw)) ||
            r.d_dw == Complex(0.0, 0.0)) {
            break;
        }
        const Complex dw = -r.value / r.d_dw;
        double lam = 1.0;
        ResidualEval rn = zero_residual(nu, sheet_point(w + lam * dw));
        for (int h = 0; h < 8 && !(std::abs(rn.value) < std::abs(r.value)); ++h) {
            lam *= 0.5;
            rn = zero_residual(nu, sheet_point(w + lam * dw));
        }
        w += lam * dw;
        r = rn;
        if (steps) steps->push_back(IterationStep{sheet_point(w), r.value});
    }
    if (!converged) converged = std::abs(r.value) < tol;
    return detail::make_record(0, nu, sheet_point(w), std::abs(r.value), it, converged);
}

enum class PathMode { FixedArg, FixedModulus, Segment };

struct NuPath {
    PathMode mode = PathMode::FixedArg;
    Complex start;
    Complex end;
    int steps = 1;
    int detour_sign = -1;       // imaginary-part sign used to lift on-axis points
    double detour_epsilon = 1e-3; // relative to |nu|
};

namespace detail {

inline Complex nu_on_path(const NuPath& p, double t) {
    Complex nu;
    switch (p.mode) {
        case PathMode::FixedArg: {
            const double m = std::abs(p.start) + (std::abs(p.end) - std::abs(p.start)) * t;
            nu = std::polar(m, std::arg(p.start));
            break;
        }
        case PathMode::FixedModulus: {
            const double th = std::arg(p.start) + (std::arg(p.end) - std::arg(p.start)) * t;
            nu = std::polar(std::abs(p.start), th);
            break;
        }
        case PathMode::Segment:
            nu = p.start + (p.end - p.start) * t;
            break;
    }
    // Lift exactly-real points off the axis; branch points at half-integer nu
    // and the gamma poles at integer nu both sit on it.
    if (p.detour_sign != 0 && std::abs(nu.imag()) <= 1e-12 * std::abs(nu)) {
        nu += Complex(0.0, p.detour_sign * p.detour_epsilon * std::abs(nu));
    }
    return nu;
}

inline constexpr double jump_guard = 0.5;
inline constexpr int step_floor_shift = 1024;

} // namespace detail

struct Trajectory {
    NuPath path;
    int label = 0;
    std::vector<ZeroRecord> records;
    std::optional<Complex> left_principal_at;
    bool stalled = false;
};

inline SheetPoint initial_guess(Complex nu, int label);

// Continuation along a nu path. The refined start point is the first record;
// each later step seeds Newton with the linear extrapolation of the previous
// two accepted w values and is halved on failure or a |dw| jump beyond the
// guard, down to 1/1024 of the nominal step. A floor hit sets `stalled` and
// returns the partial trajectory.
inline Trajectory trace_trajectory(const NuPath& path, int label) {
    if (path.steps < 1) throw range_error("trace: steps must be >= 1");
    if (path.start == path.end) throw range_error("trace: start and end coincide");
    Trajectory out;
    out.path = path;
    out.label = label;

    const Complex nu0 = detail::nu_on_path(path, 0.0);
    ZeroRecord rec = refine_zero(nu0, initial_guess(nu0, label));
    rec.label = label;
    if (!rec.converged) {
        out.records.push_back(rec);
        out.stalled = true;
        return out;
    }
    out.records.push_back(rec);

    bool seen_principal = rec.sheet_index == 0;
    double t_prev = 0.0, t_curr = 0.0;
    Complex w_prev = rec.w.w(), w_curr = rec.w.w();
    bool have_two = false;

    const double dt_nominal = 1.0 / path.steps;
    double dt = dt_nominal;
    double t = 0.0;
    while (t < 1.0) {
        const double t_next = (1.0 - t <= dt) ? 1.0 : t + dt;
        const Complex nun = detail::nu_on_path(path, t_next);
        Complex seed = w_curr;
        if (have_two && t_curr > t_prev) {
            seed = w_curr + (w_curr - w_prev) * ((t_next - t_curr) / (t_curr - t_prev));
        }
        // An evaluation failure mid-path (integer-order pole on an undetoured
        // segment, say) is a failed step, not a fatal error: partial results
        // must survive.
        ZeroRecord cand{};
        bool cand_ok = true;
        try {
            cand = refine_zero(nun, sheet_point(seed));
        } catch (const error&) {
            cand_ok = false;
        }
        cand.label = label;
        if (cand_ok && cand.converged && std::abs(cand.w.w() - w_curr) <= detail::jump_guard) {
            out.records.push_back(cand);
            if (!out.left_principal_at && seen_principal && cand.sheet_index != 0) {
                out.left_principal_at = cand.nu;
            }
            seen_principal = seen_principal || cand.sheet_index == 0;
            w_prev = w_curr;
            t_prev = t_curr;
            w_curr = cand.w.w();
            t_curr = t_next;
            have_two = true;
            t = t_next;
            dt = std::min(dt * 2.0, dt_nominal);
        } else {
            dt *= 0.5;
            if (dt < dt_nominal / detail::step_floor_shift) {
                out.stalled = true;
                return out;
            }
        }
    }
    return out;
}

// Seed dispatch. Small orders use the refined logarithmic closed form, large
// orders the transition or deep-logarithmic estimate, and the 1 <= |nu| < 5 gap
// is bridged by a short fixed-arg continuation from |nu| = 5.
inline SheetPoint initial_guess(Complex nu, int label) {
    if (label < 1) throw range_error("zero label must be >= 1");
    const double m = std::abs(nu);
    if (m == 0.0) throw range_error("initial_guess: nu must be nonzero");
    if (m < 1.0) return small_nu_zero_refined(nu, label);
    if (m >= detail::large_order_min_modulus - detail::large_order_slack) {
        if (log_zero_regime_ok(nu, label)) return log_zero_estimate(nu, label);
        if (label <= 10) return large_nu_zero(nu, label);
        throw regime_error(
            "initial_guess: no regime covers |nu| >= 5 with label > 10 outside the "
            "logarithmic-estimate domain");
    }
    NuPath bridge;
    bridge.mode = PathMode::FixedArg;
    bridge.start = std::polar(detail::large_order_min_modulus, std::arg(nu));
    bridge.end = nu;
    bridge.steps = static_cast<int>(std::ceil((detail::large_order_min_modulus - m) / 0.1));
    const Trajectory tr = trace_trajectory(bridge, label);
    if (tr.stalled || tr.records.empty()) {
        throw regime_error("initial_guess: bridging continuation from |nu| = 5 stalled");
    }
    return tr.records.back().w;
}

// Bisection on |nu| along a fixed-arg ray for the record where phi crosses -pi.
// The internal detour is 1e-5 relative: the crossing modulus shifts linearly
// with the detour offset, and 1e-3 would push the real-axis values outside
// their published tolerance.
inline double find_critical_modulus(double arg_nu, int label, double lo, double hi,
                                    int detour_sign = -1) {
    if (!(0.0 < lo && lo < hi)) throw range_error("critical: need 0 < lo < hi");
    constexpr double detour_eps = 1e-5;
    NuPath path;
    path.mode = PathMode::FixedArg;
    path.start = std::polar(hi, arg_nu);
    path.end = std::polar(lo, arg_nu);
    path.steps = std::max(40, static_cast<int>(std::ceil((hi - lo) / 0.1)));
    path.detour_sign = detour_sign;
    path.detour_epsilon = detour_eps;
    const Trajectory tr = trace_trajectory(path, label);

    const auto crosses = [](double phi_a, double phi_b) {
        return (phi_a + pi) * (phi_b + pi) <= 0.0;
    };
    std::size_t idx = tr.records.size();
    for (std::size_t i = 0; i + 1 < tr.records.size(); ++i) {
        if (crosses(tr.records[i].w.phi, tr.records[i + 1].w.phi)) {
            idx = i;
            break;
        }
    }
    if (idx == tr.records.size()) {
        throw no_crossing_error(tr.stalled
                                    ? "critical: continuation stalled before any phi = -pi crossing"
                                    : "critical: trajectory does not cross phi = -pi in the bracket");
    }

    double a = std::abs(tr.records[idx].nu);
    double b = std::abs(tr.records[idx + 1].nu);
    Complex wa = tr.records[idx].w.w();
    Complex wb = tr.records[idx + 1].w.w();
    while (std::abs(a - b) > 1e-6) {
        const double m = 0.5 * (a + b);
        Complex nu_m = std::polar(m, arg_nu);
        if (detour_sign != 0 && std::abs(nu_m.imag()) <= 1e-12 * m) {
            nu_m += Complex(0.0, detour_sign * detour_eps * m);
        }
        const Complex seed = wa + (wb - wa) * ((m - a) / (b - a));
        const ZeroRecord r = refine_zero(nu_m, sheet_point(seed));
        if (!r.converged) {
            throw no_crossing_error("critical: refinement failed during bisection");
        }
        if (crosses(wa.imag(), r.w.phi)) {
            b = m;
            wb = r.w.w();
        } else {
            a = m;
            wa = r.w.w();
        }
    }
    return 0.5 * (a + b);
}

// Rotate a K zero onto the Hankel side: same rho, phi + pi/2. The record's
// convergence additionally requires the rotated function value, obtained from
// K through the rotation identity, to vanish against the series scale.
inline ZeroRecord hankel_zero_from_k(const ZeroRecord& record) {
    if (!record.converged) {
        throw range_error("hankel_zero_from_k: record must be converged");
    }
    ZeroRecord out = record;
    out.residual_abs = std::abs(zero_residual(record.nu, record.w).value);
    const auto [t1, t2] = macdonald_k_parts(record.nu, record.w);
    const Complex k_pref = (pi / 2.0) / std::sin(record.nu * pi);
    const Complex rot = 2.0 / (pi * Complex(0.0, 1.0)) *
                        std::exp(-record.nu * pi * Complex(0.0, 0.5));
    const double h_abs = std::abs(rot * k_pref * (t1 - t2));
    const double h_scale =
        std::abs(rot * k_pref) * std::max(std::abs(t1), std::abs(t2));
    out.converged = record.converged && h_abs <= 1e-8 * h_scale;
    out.w.phi += pi / 2.0;
    out.z = out.w.z();
    out.sheet_index = out.w.sheet_index();
    return out;
}

} // namespace kzero
