#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

#include "kzero/solver.hpp"
#include "kzero/types.hpp"

namespace kzero {

// Reference Newton runs at nu = 21 e^{i 7 pi / 20}: hand-picked seeds, the
// residual at the seed, the converged zero, and the published iteration count.
struct ReplayBlock {
    Complex seed_z;
    Complex expected_first_residual;
    Complex expected_z;
    int expected_iterations;
};

inline Complex replay_order() { return std::polar(21.0, 7.0 * pi / 20.0); }

inline const std::array<ReplayBlock, 3>& replay_blocks() {
    static const std::array<ReplayBlock, 3> blocks = {{
        {Complex(14.0, -8.6), Complex(-1.27330, -0.0817656),
         Complex(14.02389461, -8.67463884), 4},
        {Complex(10.9, -8.0), Complex(-1.51232, -0.835798),
         Complex(10.99983889, -7.95694795), 5},
        {Complex(8.5, -7.0), Complex(0.741241, 3.45969),
         Complex(8.82889659, -7.32655825), 9},
    }};
    return blocks;
}

struct ReplayResult {
    int block = 0;
    ZeroRecord record;
    std::vector<IterationStep> steps;
    double z_err_re = 0.0;
    double z_err_im = 0.0;
    double first_residual_rel_err = 0.0;
    bool z_ok = false;
    bool residual_ok = false;
    bool iterations_ok = false;
    bool pass = false;
};

struct ReplayReport {
    std::vector<ReplayResult> blocks;
    bool pass = true;
};

inline constexpr double replay_z_tol = 5e-8;           // per component
inline constexpr double replay_residual_rel_tol = 1e-3;
inline constexpr int replay_iteration_slack = 2;

// Replays every block from its seed and grades the outcome. `targets` exists
// so a test can feed corrupted expectations and watch the report fail.
inline ReplayReport run_replay(const std::array<ReplayBlock, 3>& targets = replay_blocks()) {
    ReplayReport report;
    const Complex nu = replay_order();
    int index = 1;
    for (const ReplayBlock& blk : targets) {
        ReplayResult res;
        res.block = index++;
        res.record = refine_zero(nu, sheet_point_from_z(blk.seed_z), 30, 1e-10, &res.steps);
        res.record.label = res.block;
        res.z_err_re = std::abs(res.record.z.real() - blk.expected_z.real());
        res.z_err_im = std::abs(res.record.z.imag() - blk.expected_z.imag());
        res.z_ok = res.record.converged && res.z_err_re < replay_z_tol &&
                   res.z_err_im < replay_z_tol;
        const Complex first = res.steps.empty() ? Complex(0.0, 0.0) : res.steps.front().residual;
        res.first_residual_rel_err =
            std::abs(first - blk.expected_first_residual) / std::abs(blk.expected_first_residual);
        res.residual_ok = res.first_residual_rel_err < replay_residual_rel_tol;
        res.iterations_ok =
            std::abs(res.record.iterations - blk.expected_iterations) <= replay_iteration_slack;
        res.pass = res.z_ok && res.residual_ok && res.iterations_ok;
        report.pass = report.pass && res.pass;
        report.blocks.push_back(res);
    }
    return report;
}

} // namespace kzero
