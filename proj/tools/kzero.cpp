// kzero: Macdonald function K_nu on the multi-sheet log surface.
// Subcommands evaluate K, refine zeros, trace zero trajectories under
// continuation in nu, locate critical moduli, and replay the reference
// newton runs. Exit codes: 0 success, 1 usage or parse failure, 2 numerical
// failure (pole, integer order, stall, missing crossing).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kzero/kzero.hpp"

using namespace kzero;
using nlohmann::json;

namespace {

json complex_json(Complex v) { return json::array({v.real(), v.imag()}); }

json record_json(const ZeroRecord& r) {
    return json{
        {"nu", complex_json(r.nu)},
        {"label", r.label},
        {"z", complex_json(r.z)},
        {"rho", r.w.rho},
        {"phi", r.w.phi},
        {"sheet_index", r.sheet_index},
        {"residual_abs", r.residual_abs},
        {"iterations", r.iterations},
        {"converged", r.converged},
    };
}

void print_record_text(const ZeroRecord& r) {
    std::printf("nu    = (%.12g, %.12g)   label %d\n", r.nu.real(), r.nu.imag(), r.label);
    std::printf("z     = (%.12g, %.12g)\n", r.z.real(), r.z.imag());
    std::printf("w     = rho %.12g, phi %.12g   (sheet %d)\n", r.w.rho, r.w.phi,
                r.sheet_index);
    std::printf("|E|   = %.3e after %d iteration(s), converged: %s\n", r.residual_abs,
                r.iterations, r.converged ? "yes" : "no");
}

// ---- eval -------------------------------------------------------------------

struct EvalOpts {
    std::string nu_text;
    std::string z_text;
    std::string z_sheet_text;
    bool with_residual = false;
    bool as_json = false;
};

int run_eval(const EvalOpts& o) {
    const Complex nu = parse_nu(o.nu_text);
    if (o.z_text.empty() && o.z_sheet_text.empty()) {
        throw parse_error("eval needs --z re,im or --z-sheet rho,phi");
    }
    SheetPoint w;
    if (!o.z_sheet_text.empty()) {
        const Complex p = parse_complex_pair(o.z_sheet_text, "z-sheet");
        w = SheetPoint{p.real(), p.imag()};
    } else {
        const Complex z = parse_complex_pair(o.z_text, "z");
        if (z == Complex(0.0, 0.0)) throw range_error("z must be nonzero");
        w = sheet_point_from_z(z);
    }

    const Complex k = macdonald_k(nu, w);
    const SeriesResult sm = ascending_series(+1, nu, w);
    const SeriesResult sp = ascending_series(-1, nu, w);

    if (o.as_json) {
        json out{
            {"nu", complex_json(nu)},
            {"z", complex_json(w.z())},
            {"rho", w.rho},
            {"phi", w.phi},
            {"sheet_index", w.sheet_index()},
            {"K", complex_json(k)},
            {"series",
             {{"minus", {{"terms", sm.terms_used}, {"truncation_ok", sm.truncation_ok}}},
              {"plus", {{"terms", sp.terms_used}, {"truncation_ok", sp.truncation_ok}}}}},
        };
        if (o.with_residual) {
            const ResidualEval r = zero_residual(nu, w);
            out["residual"] = complex_json(r.value);
            out["residual_derivative"] = complex_json(r.d_dw);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::printf("nu  = (%.12g, %.12g)\n", nu.real(), nu.imag());
    std::printf("w   = rho %.12g, phi %.12g   (sheet %d)\n", w.rho, w.phi, w.sheet_index());
    std::printf("z   = (%.12g, %.12g)\n", w.z().real(), w.z().imag());
    std::printf("K   = (%.12g, %.12g)\n", k.real(), k.imag());
    std::printf("series terms %d/%d, truncation %s\n", sm.terms_used, sp.terms_used,
                (sm.truncation_ok && sp.truncation_ok) ? "ok" : "CAPPED");
    if (o.with_residual) {
        const ResidualEval r = zero_residual(nu, w);
        std::printf("E     = (%.12g, %.12g)\n", r.value.real(), r.value.imag());
        std::printf("dE/dw = (%.12g, %.12g)\n", r.d_dw.real(), r.d_dw.imag());
    }
    return 0;
}

// ---- zero -------------------------------------------------------------------

struct ZeroOpts {
    std::string nu_text;
    int label = 1;
    std::string seed_text;
    bool no_canonicalize = false;
    bool as_json = false;
    bool as_csv = false;
};

int run_zero(const ZeroOpts& o) {
    const Complex nu = parse_nu(o.nu_text);
    ZeroRecord rec;
    std::string note;

    if (!o.seed_text.empty()) {
        const Complex p = parse_complex_pair(o.seed_text, "seed");
        rec = refine_zero(nu, SheetPoint{p.real(), p.imag()});
        rec.label = o.label;
    } else if (o.no_canonicalize) {
        rec = refine_zero(nu, initial_guess(nu, o.label));
        rec.label = o.label;
    } else {
        const Order ord = canonicalize(nu);
        ZeroRecord raw = refine_zero(ord.canonical, initial_guess(ord.canonical, o.label));
        raw.label = o.label;
        if (ord.conj_applied) {
            // zeros conjugate together with the order
            raw.nu = nu;
            raw.w = SheetPoint{raw.w.rho, -raw.w.phi};
            raw.z = raw.w.z();
            raw.sheet_index = raw.w.sheet_index();
            note = "order mapped through conjugation; zero conjugated back";
        } else if (ord.negate_applied) {
            raw.nu = nu; // K_{-nu} = K_nu: same zero set
            note = "order mapped through negation; zero set unchanged";
        }
        if (nu.imag() == 0.0 && raw.w.phi < 0.0 && raw.w.phi >= -pi - 1e-9) {
            // real order: zeros come in conjugate pairs; present the upper
            // member and say so
            raw.w = SheetPoint{raw.w.rho, -raw.w.phi};
            raw.z = raw.w.z();
            raw.sheet_index = raw.w.sheet_index();
            note = "real order: presenting the upper member of the conjugate zero pair";
        }
        rec = raw;
    }

    if (o.as_json) {
        json out = record_json(rec);
        if (!note.empty()) out["note"] = note;
        std::cout << out.dump(2) << "\n";
    } else if (o.as_csv) {
        std::cout << csv_header() << "\n" << csv_row(row_from_record(rec)) << "\n";
        if (!note.empty()) std::cerr << "note: " << note << "\n";
    } else {
        print_record_text(rec);
        if (!note.empty()) std::printf("note: %s\n", note.c_str());
    }
    return rec.converged ? 0 : 2;
}

// ---- trajectory ---------------------------------------------------------------

struct TrajOpts {
    bool fixed_arg = false;
    bool fixed_mod = false;
    bool segment = false;
    std::string arg_text;
    std::string mod_text;
    std::string from_text;
    std::string to_text;
    int steps = 40;
    std::vector<int> labels;
    std::string out_path;
    int detour_sign = -1;
    double detour_eps = 1e-3;
};

NuPath build_path(const TrajOpts& o) {
    NuPath p;
    p.steps = o.steps;
    p.detour_sign = o.detour_sign;
    p.detour_epsilon = o.detour_eps;
    if (o.fixed_arg) {
        if (o.arg_text.empty() || o.mod_text.empty()) {
            throw parse_error("fixed-arg mode needs --arg ANGLE and --mod LO:HI");
        }
        const double ang = parse_angle(o.arg_text);
        const auto [a, b] = split_range(o.mod_text, "mod");
        p.mode = PathMode::FixedArg;
        p.start = std::polar(detail::parse_double_strict(a, "mod"), ang);
        p.end = std::polar(detail::parse_double_strict(b, "mod"), ang);
    } else if (o.fixed_mod) {
        if (o.arg_text.empty() || o.mod_text.empty()) {
            throw parse_error("fixed-mod mode needs --mod M and --arg LO:HI");
        }
        const double mod = detail::parse_double_strict(o.mod_text, "mod");
        const auto [a, b] = split_range(o.arg_text, "arg");
        p.mode = PathMode::FixedModulus;
        p.start = std::polar(mod, parse_angle(a));
        p.end = std::polar(mod, parse_angle(b));
    } else {
        if (o.from_text.empty() || o.to_text.empty()) {
            throw parse_error("segment mode needs --from NU and --to NU");
        }
        p.mode = PathMode::Segment;
        p.start = parse_nu(o.from_text);
        p.end = parse_nu(o.to_text);
    }
    return p;
}

int run_trajectory(const TrajOpts& o) {
    const NuPath path = build_path(o);
    std::vector<int> labels = o.labels;
    if (labels.empty()) labels.push_back(1);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) throw parse_error("cannot open output file: " + o.out_path);
        out = &file;
    }

    *out << csv_header() << "\n";
    bool any_stall = false;
    for (int label : labels) {
        const Trajectory tr = trace_trajectory(path, label);
        for (const ZeroRecord& rec : tr.records) {
            *out << csv_row(row_from_record(rec)) << "\n";
        }
        std::cerr << "label " << label << ": " << tr.records.size() << " record(s)";
        if (tr.left_principal_at) {
            std::cerr << ", left principal sheet at nu = (" << tr.left_principal_at->real()
                      << ", " << tr.left_principal_at->imag() << ")";
        } else {
            std::cerr << ", never left the principal sheet";
        }
        std::cerr << (tr.stalled ? ", STALLED (partial output)" : "") << "\n";
        any_stall = any_stall || tr.stalled;
    }
    return any_stall ? 2 : 0;
}

// ---- critical ------------------------------------------------------------------

struct CritOpts {
    std::string arg_text;
    std::vector<int> labels;
    std::string bracket_text;
    int detour_sign = -1;
};

int run_critical(const CritOpts& o) {
    const double ang = parse_angle(o.arg_text);
    const auto [lo, hi] = parse_bracket(o.bracket_text);
    std::vector<int> labels = o.labels;
    if (labels.empty()) labels.push_back(1);
    for (int label : labels) {
        const double m = find_critical_modulus(ang, label, lo, hi, o.detour_sign);
        std::printf("label %d: critical |nu| = %.6f  (arg %.6f)\n", label, m, ang);
    }
    return 0;
}

// ---- replay -----------------------------------------------------------------------

int run_verify() {
    const ReplayReport report = run_replay();
    for (const ReplayResult& res : report.blocks) {
        std::printf("block %d: z = (%.8f, %.8f), dz = (%.2e, %.2e), iterations %d, "
                    "seed residual rel err %.2e -> %s\n",
                    res.block, res.record.z.real(), res.record.z.imag(), res.z_err_re,
                    res.z_err_im, res.record.iterations, res.first_residual_rel_err,
                    res.pass ? "ok" : "FAIL");
    }
    std::printf("replay: %s\n", report.pass ? "PASS" : "FAIL");
    return report.pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macdonald function K_nu(z) for complex order on the log surface: "
                 "evaluation, zeros, trajectories, critical moduli"};
    app.require_subcommand(1);

    EvalOpts eo;
    CLI::App* eval = app.add_subcommand("eval", "evaluate K_nu at a point");
    eval->add_option("--nu", eo.nu_text, "order: a+bi, M@ANGLE, or bare real")->required();
    CLI::Option* opt_z = eval->add_option("--z", eo.z_text, "point as re,im (principal sheet)");
    CLI::Option* opt_zs =
        eval->add_option("--z-sheet", eo.z_sheet_text, "point as rho,phi (any sheet)");
    opt_z->excludes(opt_zs);
    eval->add_flag("--residual", eo.with_residual, "also print the zero residual E and dE/dw");
    eval->add_flag("--json", eo.as_json, "JSON output");

    ZeroOpts zo;
    CLI::App* zero = app.add_subcommand("zero", "refine the label-th zero of K_nu");
    zero->add_option("--nu", zo.nu_text, "order")->required();
    zero->add_option("--label", zo.label, "zero index, 1-based")->check(CLI::PositiveNumber);
    zero->add_option("--seed", zo.seed_text, "override seed as rho,phi");
    zero->add_flag("--no-canonicalize", zo.no_canonicalize,
                   "work at nu exactly as given; skip folding and pair presentation");
    zero->add_flag("--json", zo.as_json, "JSON output");
    zero->add_flag("--csv", zo.as_csv, "CSV output");

    TrajOpts to;
    CLI::App* traj = app.add_subcommand("trajectory", "trace zeros along a path in nu");
    traj->add_flag("--fixed-arg", to.fixed_arg, "vary |nu| at fixed arg");
    traj->add_flag("--fixed-mod", to.fixed_mod, "vary arg nu at fixed |nu|");
    traj->add_flag("--segment", to.segment, "straight segment between two orders");
    traj->add_option("--arg", to.arg_text, "angle (fixed-arg) or range LO:HI (fixed-mod)");
    traj->add_option("--mod", to.mod_text, "range LO:HI (fixed-arg) or value (fixed-mod)");
    traj->add_option("--from", to.from_text, "segment start order");
    traj->add_option("--to", to.to_text, "segment end order");
    traj->add_option("--steps", to.steps, "nominal step count")->check(CLI::PositiveNumber);
    traj->add_option("--label", to.labels, "zero label(s), repeatable");
    traj->add_option("--out", to.out_path, "CSV output file (default stdout)");
    traj->add_option("--detour-sign", to.detour_sign, "on-axis detour side: -1, 0, 1")
        ->check(CLI::Range(-1, 1));
    traj->add_option("--detour-eps", to.detour_eps, "relative detour size");

    CritOpts co;
    CLI::App* crit =
        app.add_subcommand("critical", "modulus where a zero crosses phi = -pi on a ray");
    crit->add_option("--arg-nu", co.arg_text, "ray angle")->required();
    crit->add_option("--label", co.labels, "zero label(s), repeatable");
    crit->add_option("--bracket", co.bracket_text, "modulus bracket LO,HI")->required();
    crit->add_option("--detour-sign", co.detour_sign, "on-axis detour side: -1, 0, 1")
        ->check(CLI::Range(-1, 1));

    CLI::App* verify = app.add_subcommand("replay", "replay the stored reference newton runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(eval)) return run_eval(eo);
        if (app.got_subcommand(zero)) return run_zero(zo);
        if (app.got_subcommand(traj)) {
            const int modes = (to.fixed_arg ? 1 : 0) + (to.fixed_mod ? 1 : 0) +
                              (to.segment ? 1 : 0);
            if (modes != 1) {
                throw parse_error("pick exactly one of --fixed-arg, --fixed-mod, --segment");
            }
            return run_trajectory(to);
        }
        if (app.got_subcommand(crit)) return run_critical(co);
        if (app.got_subcommand(verify)) return run_verify();
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
