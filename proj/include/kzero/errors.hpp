#pragma once

#include <stdexcept>
#include <string>

namespace kzero {

// Base for all numerical-contract violations thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gamma pole or vanishing Pochhammer denominator.
struct pole_error : error {
    explicit pole_error(const std::string& msg) : error(msg) {}
};

// K_nu assembled through 1/sin(nu*pi); real integer nu is rejected.
struct integer_order_error : error {
    explicit integer_order_error(const std::string& msg) : error(msg) {}
};

// Argument outside the supported range of an evaluator or table.
struct range_error : error {
    explicit range_error(const std::string& msg) : error(msg) {}
};

// An asymptotic estimate was requested outside its validity regime.
struct regime_error : error {
    explicit regime_error(const std::string& msg) : error(msg) {}
};

// Critical-modulus search: the bracket does not straddle phi = -pi.
struct no_crossing_error : error {
    explicit no_crossing_error(const std::string& msg) : error(msg) {}
};

// Malformed CLI/text input.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

} // namespace kzero
