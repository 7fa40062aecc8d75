#include <doctest.h>

#include <stdexcept>
#include <string>

#include "ffr/poly_io.hpp"
#include "ffr/polynomial.hpp"

using namespace ffr;

namespace {
bool mentions(const std::exception& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}
}  // namespace

TEST_CASE("coefficients parse from strings, integers, and floats") {
    const ExactPolynomial p =
        parse_polynomial_json(R"({"coeffs": ["-3", "1"]})", "arg");
    CHECK(p == from_roots({Rational(3)}, Rational(1)));

    const ExactPolynomial q =
        parse_polynomial_json(R"({"coeffs": [2, -3, 1]})", "arg");
    CHECK(q == from_roots({Rational(1), Rational(2)}, Rational(1)));

    const ExactPolynomial r =
        parse_polynomial_json(R"({"coeffs": ["1/2", 0.25]})", "arg");
    CHECK(r.coeff(0) == Rational(1, 2));
    CHECK(r.coeff(1) == Rational(1, 4));
}

TEST_CASE("errors name the origin and the offending field") {
    CHECK_THROWS_WITH_AS(parse_polynomial_json("{nope", "input.json"),
                         doctest::Contains("input.json"), std::runtime_error);
    try {
        parse_polynomial_json(R"({"coefs": [1]})", "input.json");
        FAIL("missing coeffs accepted");
    } catch (const std::exception& e) {
        CHECK(mentions(e, "coeffs"));
        CHECK(mentions(e, "input.json"));
    }
    try {
        parse_polynomial_json(R"({"coeffs": ["1", "x"]})", "input.json");
        FAIL("bad entry accepted");
    } catch (const std::exception& e) {
        CHECK(mentions(e, "coeffs[1]"));
    }
    try {
        parse_polynomial_json(R"({"coeffs": []})", "input.json");
        FAIL("empty coeffs accepted");
    } catch (const std::exception& e) {
        CHECK(mentions(e, "coeffs"));
    }
    try {
        parse_polynomial_json(R"({"coeffs": ["1/0"]})", "input.json");
        FAIL("zero denominator accepted");
    } catch (const std::exception& e) {
        CHECK(mentions(e, "coeffs[0]"));
    }
}

TEST_CASE("serialization round trips exactly") {
    const ExactPolynomial p = from_roots(
        {Rational(1, 3), Rational(-7, 2), Rational(0)}, Rational(22, 7));
    CHECK(parse_polynomial_json(polynomial_to_json(p), "roundtrip") == p);

    const ExactPolynomial zero;
    CHECK(parse_polynomial_json(polynomial_to_json(zero), "roundtrip").is_zero());

    FloatPolynomial f;
    f.coeffs = {0.1, -2.5, 1.0};
    const ExactPolynomial back =
        parse_polynomial_json(polynomial_to_json(f), "roundtrip");
    CHECK(back == to_exact(f));
}

TEST_CASE("inline root lists") {
    const ExactPolynomial p = parse_root_list("1,2,5/2");
    CHECK(p == from_roots({Rational(1), Rational(2), Rational(5, 2)}, Rational(1)));
    CHECK(parse_root_list(" 4 , 0 ") ==
          from_roots({Rational(4), Rational(0)}, Rational(1)));
    CHECK_THROWS_AS(parse_root_list(""), std::runtime_error);
    CHECK_THROWS_AS(parse_root_list("1,,2"), std::runtime_error);
    CHECK_THROWS_AS(parse_root_list("1,two"), std::runtime_error);
}
