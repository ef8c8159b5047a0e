#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kzero/errors.hpp"
#include "kzero/solver.hpp"
#include "kzero/types.hpp"

namespace kzero {

// Flat serialization of one ZeroRecord; column order is part of the output contract.
struct OutputRow {
    double nu_re = 0.0;
    double nu_im = 0.0;
    int label = 0;
    double z_re = 0.0;
    double z_im = 0.0;
    double rho = 0.0;
    double phi = 0.0;
    int sheet_index = 0;
    double residual_abs = 0.0;
    int iterations = 0;
    bool converged = false;
};

inline OutputRow row_from_record(const ZeroRecord& r) {
    OutputRow row;
    row.nu_re = r.nu.real();
    row.nu_im = r.nu.imag();
    row.label = r.label;
    row.z_re = r.z.real();
    row.z_im = r.z.imag();
    row.rho = r.w.rho;
    row.phi = r.w.phi;
    row.sheet_index = r.sheet_index;
    row.residual_abs = r.residual_abs;
    row.iterations = r.iterations;
    row.converged = r.converged;
    return row;
}

inline std::string format_sig(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

inline std::string csv_header() {
    return "nu_re,nu_im,label,z_re,z_im,rho,phi,sheet_index,residual_abs,iterations,converged";
}

inline std::string csv_row(const OutputRow& r) {
    std::ostringstream os;
    os << format_sig(r.nu_re) << ',' << format_sig(r.nu_im) << ',' << r.label << ','
       << format_sig(r.z_re) << ',' << format_sig(r.z_im) << ',' << format_sig(r.rho) << ','
       << format_sig(r.phi) << ',' << r.sheet_index << ',' << format_sig(r.residual_abs) << ','
       << r.iterations << ',' << (r.converged ? 1 : 0);
    return os.str();
}

namespace detail {

inline double parse_double_strict(const std::string& s, const char* what) {
    if (s.empty()) throw parse_error(std::string(what) + ": empty number");
    char* endp = nullptr;
    const double v = std::strtod(s.c_str(), &endp);
    if (endp != s.c_str() + s.size()) {
        throw parse_error(std::string(what) + ": bad number '" + s + "'");
    }
    return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

// Reads rows written by csv_row; the header line is skipped if present.
inline std::vector<OutputRow> parse_output_rows(std::istream& in) {
    std::vector<OutputRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("nu_re", 0) == 0) continue;
        const auto f = detail::split(line, ',');
        if (f.size() != 11) throw parse_error("row does not have 11 fields: " + line);
        OutputRow r;
        r.nu_re = detail::parse_double_strict(f[0], "nu_re");
        r.nu_im = detail::parse_double_strict(f[1], "nu_im");
        r.label = static_cast<int>(detail::parse_double_strict(f[2], "label"));
        r.z_re = detail::parse_double_strict(f[3], "z_re");
        r.z_im = detail::parse_double_strict(f[4], "z_im");
        r.rho = detail::parse_double_strict(f[5], "rho");
        r.phi = detail::parse_double_strict(f[6], "phi");
        r.sheet_index = static_cast<int>(detail::parse_double_strict(f[7], "sheet_index"));
        r.residual_abs = detail::parse_double_strict(f[8], "residual_abs");
        r.iterations = static_cast<int>(detail::parse_double_strict(f[9], "iterations"));
        r.converged = detail::parse_double_strict(f[10], "converged") != 0.0;
        rows.push_back(r);
    }
    return rows;
}

// Angle grammar: radians by default; at most one "pi" factor, written as a
// suffix ("0.5pi", "7/20pi") or as the numerator ("pi/4", "-pi/2"); "p/q"
// fractions work with or without it.
inline double parse_angle(const std::string& text) {
    std::string body = text;
    double scale = 1.0;
    const auto at = body.find("pi");
    if (at != std::string::npos) {
        if (body.find("pi", at + 1) != std::string::npos) {
            throw parse_error("angle: more than one 'pi' in '" + text + "'");
        }
        scale = pi;
        body.erase(at, 2);
    }
    std::string num = body;
    std::string den;
    const auto slash = body.find('/');
    if (slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    double value;
    if (num.empty() || num == "+" || num == "-") {
        if (scale == 1.0) throw parse_error("angle: bad number '" + text + "'");
        value = (num == "-") ? -1.0 : 1.0;
    } else {
        value = detail::parse_double_strict(num, "angle numerator");
    }
    if (slash != std::string::npos) {
        const double d = detail::parse_double_strict(den, "angle denominator");
        if (d == 0.0) throw parse_error("angle: zero denominator");
        value /= d;
    }
    return value * scale;
}

// nu grammar: "M@ANGLE" (polar), "a+bi" / "a-bi" / "bi" (cartesian), or a bare real.
inline Complex parse_nu(const std::string& text) {
    if (text.empty()) throw parse_error("nu: empty");
    const auto at = text.find('@');
    if (at != std::string::npos) {
        const double mod = detail::parse_double_strict(text.substr(0, at), "nu modulus");
        const double ang = parse_angle(text.substr(at + 1));
        return std::polar(mod, ang);
    }
    if (text.back() == 'i') {
        const std::string body = text.substr(0, text.size() - 1);
        // Split at the last +/- that is not a leading sign or an exponent sign.
        std::size_t split_pos = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            const char c = body[i];
            if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                split_pos = i;
                break;
            }
        }
        if (split_pos == std::string::npos) {
            std::string im = body;
            if (im.empty() || im == "+") im = "1";
            if (im == "-") im = "-1";
            return Complex(0.0, detail::parse_double_strict(im, "nu imaginary part"));
        }
        const double re = detail::parse_double_strict(body.substr(0, split_pos), "nu real part");
        std::string im = body.substr(split_pos);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return Complex(re, detail::parse_double_strict(im, "nu imaginary part"));
    }
    return Complex(detail::parse_double_strict(text, "nu"), 0.0);
}

// "re,im" pair or a bare real.
inline Complex parse_complex_pair(const std::string& text, const char* what) {
    const auto f = detail::split(text, ',');
    if (f.size() == 1) return Complex(detail::parse_double_strict(f[0], what), 0.0);
    if (f.size() != 2) throw parse_error(std::string(what) + ": expected 're,im'");
    return Complex(detail::parse_double_strict(f[0], what),
                   detail::parse_double_strict(f[1], what));
}

// "a:b" ranges; each side parsed by the supplied parser.
inline std::pair<std::string, std::string> split_range(const std::string& text,
                                                       const char* what) {
    const auto f = detail::split(text, ':');
    if (f.size() != 2) throw parse_error(std::string(what) + ": expected 'a:b'");
    return {f[0], f[1]};
}

// "lo,hi" or "lo:hi".
inline std::pair<double, double> parse_bracket(const std::string& text) {
    auto f = detail::split(text, ',');
    if (f.size() == 1) f = detail::split(text, ':');
    if (f.size() != 2) throw parse_error("bracket: expected 'lo,hi'");
    return {detail::parse_double_strict(f[0], "bracket lo"),
            detail::parse_double_strict(f[1], "bracket hi")};
}

} // namespace kzero
