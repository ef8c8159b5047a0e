#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <sstream>

#include "kzero/io.hpp"

using namespace kzero;

TEST_CASE("nu grammar accepts cartesian, polar and bare forms", "[io]") {
    CHECK(parse_nu("2.5") == Complex(2.5, 0.0));
    CHECK(parse_nu("-0.75") == Complex(-0.75, 0.0));
    CHECK(parse_nu("0.3+0.2i") == Complex(0.3, 0.2));
    CHECK(parse_nu("-1.2-0.4i") == Complex(-1.2, -0.4));
    CHECK(parse_nu("10i") == Complex(0.0, 10.0));
    CHECK(parse_nu("-10i") == Complex(0.0, -10.0));
    CHECK(parse_nu("i") == Complex(0.0, 1.0));
    CHECK(parse_nu("-i") == Complex(0.0, -1.0));
    CHECK(parse_nu("1e-2i") == Complex(0.0, 0.01));
    CHECK(parse_nu("2+i") == Complex(2.0, 1.0));

    const Complex polar = parse_nu("21@7/20pi");
    CHECK(std::abs(polar - std::polar(21.0, 7.0 * pi / 20.0)) < 1e-14);
    const Complex down = parse_nu("3.5@-pi/2");
    CHECK(std::abs(down - Complex(0.0, -3.5)) < 1e-14);
}

TEST_CASE("nu grammar rejects garbage", "[io]") {
    CHECK_THROWS_AS(parse_nu(""), parse_error);
    CHECK_THROWS_AS(parse_nu("abc"), parse_error);
    CHECK_THROWS_AS(parse_nu("1+2j"), parse_error);
    CHECK_THROWS_AS(parse_nu("2.5@"), parse_error);
    CHECK_THROWS_AS(parse_nu("@1.0"), parse_error);
    CHECK_THROWS_AS(parse_nu("1..2"), parse_error);
}

TEST_CASE("angle grammar understands pi multiples and fractions", "[io]") {
    CHECK(parse_angle("pi") == Catch::Approx(pi));
    CHECK(parse_angle("-pi") == Catch::Approx(-pi));
    CHECK(parse_angle("0.5pi") == Catch::Approx(pi / 2.0));
    CHECK(parse_angle("7/20pi") == Catch::Approx(7.0 * pi / 20.0));
    CHECK(parse_angle("-3/4pi") == Catch::Approx(-0.75 * pi));
    CHECK(parse_angle("1.5708") == Catch::Approx(1.5708));
    CHECK(parse_angle("3/4") == Catch::Approx(0.75));
    CHECK_THROWS_AS(parse_angle("1/0pi"), parse_error);
    CHECK_THROWS_AS(parse_angle("xpi"), parse_error);
}

TEST_CASE("brackets and ranges parse both separators", "[io]") {
    CHECK(parse_bracket("0.5,3.5") == std::pair<double, double>{0.5, 3.5});
    CHECK(parse_bracket("0.5:3.5") == std::pair<double, double>{0.5, 3.5});
    CHECK_THROWS_AS(parse_bracket("1"), parse_error);
    const auto [a, b] = split_range("8:0.3", "mod");
    CHECK(a == "8");
    CHECK(b == "0.3");
    CHECK_THROWS_AS(split_range("8", "mod"), parse_error);

    CHECK(parse_complex_pair("1.5,-2", "z") == Complex(1.5, -2.0));
    CHECK(parse_complex_pair("3", "z") == Complex(3.0, 0.0));
    CHECK_THROWS_AS(parse_complex_pair("1,2,3", "z"), parse_error);
}

TEST_CASE("csv rows carry all record fields in the documented order", "[io]") {
    const std::string header = csv_header();
    CHECK(header ==
          "nu_re,nu_im,label,z_re,z_im,rho,phi,sheet_index,residual_abs,iterations,converged");

    ZeroRecord rec;
    rec.label = 3;
    rec.nu = Complex(0.25, -1.5);
    rec.w = SheetPoint{-0.125, 7.25};
    rec.z = rec.w.z();
    rec.residual_abs = 2.5e-12;
    rec.iterations = 4;
    rec.converged = true;
    rec.sheet_index = rec.w.sheet_index();

    const OutputRow row = row_from_record(rec);
    const std::string line = csv_row(row);
    CHECK(line.find("0.25,-1.5,3,") == 0);
    CHECK(line.substr(line.size() - 2) == ",1");
}

TEST_CASE("csv output round trips through the parser", "[io]") {
    std::ostringstream out;
    out << csv_header() << "\n";
    std::vector<OutputRow> rows;
    for (int i = 0; i < 5; ++i) {
        ZeroRecord rec;
        rec.label = i + 1;
        rec.nu = Complex(0.1 * i, -0.3 * i);
        rec.w = SheetPoint{-0.37 * i, 1.0 + 2.0 * pi * i};
        rec.z = rec.w.z();
        rec.residual_abs = 1e-11 / (i + 1);
        rec.iterations = i;
        rec.converged = (i % 2 == 0);
        rec.sheet_index = rec.w.sheet_index();
        rows.push_back(row_from_record(rec));
        out << csv_row(rows.back()) << "\n";
    }

    std::istringstream in(out.str());
    const std::vector<OutputRow> parsed = parse_output_rows(in);
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        // serialized forms must agree exactly: 12 significant digits each way
        CHECK(csv_row(parsed[i]) == csv_row(rows[i]));
    }
}

TEST_CASE("csv parser skips headers and rejects malformed rows", "[io]") {
    std::istringstream ok("nu_re,nu_im,label,z_re,z_im,rho,phi,sheet_index,residual_abs,"
                          "iterations,converged\n"
                          "1,0,1,1,0,0,0,0,1e-12,3,1\n\n"
                          "2,0,1,1,0,0,0,0,1e-12,3,0\n");
    CHECK(parse_output_rows(ok).size() == 2);

    std::istringstream missing("1,0,1,1,0,0,0,0,1e-12,3\n");
    CHECK_THROWS_AS(parse_output_rows(missing), parse_error);

    std::istringstream garbage("1,0,1,x,0,0,0,0,1e-12,3,1\n");
    CHECK_THROWS_AS(parse_output_rows(garbage), parse_error);
}
