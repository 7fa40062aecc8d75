#include <doctest.h>

#include <stdexcept>

#include "ffr/polynomial.hpp"

using namespace ffr;

namespace {
ExactPolynomial make(std::initializer_list<int> ascending) {
    std::vector<Rational> c;
    for (int v : ascending) c.emplace_back(v);
    return ExactPolynomial(std::move(c));
}
}  // namespace

TEST_CASE("normalization drops trailing zeros") {
    ExactPolynomial p(std::vector<Rational>{Rational(1), Rational(2), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(ExactPolynomial::zero().degree() == -1);
    CHECK(ExactPolynomial::zero().is_zero());
    CHECK(ExactPolynomial::constant(Rational(0)).is_zero());
    CHECK(ExactPolynomial::monomial(3, Rational(2)).coeff(3) == Rational(2));
    CHECK(ExactPolynomial::monomial(3).coeff(1) == Rational(0));
}

TEST_CASE("from_roots expands elementary symmetric functions") {
    const ExactPolynomial p = from_roots({Rational(1), Rational(2)}, Rational(1));
    CHECK(p == make({2, -3, 1}));
    const ExactPolynomial q = from_roots({Rational(0), Rational(5, 2)}, Rational(4));
    CHECK(q == ExactPolynomial(std::vector<Rational>{Rational(0), Rational(-10), Rational(4)}));
    CHECK(from_roots({}, Rational(3)) == ExactPolynomial::constant(Rational(3)));
}

TEST_CASE("arithmetic and evaluation") {
    const ExactPolynomial p = make({2, -3, 1});
    CHECK(evaluate(p, Rational(1)) == Rational(0));
    CHECK(evaluate(p, Rational(4)) == Rational(6));
    CHECK(p + make({-2, 3, -1}) == ExactPolynomial::zero());
    CHECK(make({0, 1}) * make({0, 1}) == make({0, 0, 1}));
    CHECK(Rational(3) * make({1, 1}) == make({3, 3}));
    CHECK(derivative(p) == make({-3, 2}));
    CHECK(derivative(ExactPolynomial::constant(Rational(5))).is_zero());
    CHECK(poly_pow(make({1, 1}), 3) == make({1, 3, 3, 1}));
    CHECK(poly_pow(p, 0) == ExactPolynomial::constant(Rational(1)));
}

TEST_CASE("euclidean division") {
    const ExactPolynomial num = make({2, -3, 1});
    const ExactPolynomial den = make({-1, 1});
    const DivisionResult div = divide(num, den);
    CHECK(div.quotient == make({-2, 1}));
    CHECK(div.remainder.is_zero());

    const DivisionResult div2 = divide(make({1, 0, 1}), make({1, 1}));
    CHECK(div2.quotient * make({1, 1}) + div2.remainder == make({1, 0, 1}));
    CHECK(div2.remainder.degree() < 1);
    CHECK_THROWS_AS(divide(num, ExactPolynomial::zero()), std::invalid_argument);
}

TEST_CASE("gcd and squarefree part") {
    const ExactPolynomial a = from_roots({Rational(1), Rational(1), Rational(2)}, Rational(3));
    const ExactPolynomial b = from_roots({Rational(1), Rational(3)}, Rational(2));
    CHECK(poly_gcd(a, b) == make({-1, 1}));
    CHECK(squarefree_part(a) == from_roots({Rational(1), Rational(2)}, Rational(1)));
    CHECK(poly_gcd(ExactPolynomial::zero(), ExactPolynomial::zero()).is_zero());
}

TEST_CASE("structural maps") {
    const ExactPolynomial p = make({2, -3, 1});
    CHECK(substitute_square(p) == make({2, 0, -3, 0, 1}));
    CHECK(shift_up(p, 2) == make({0, 0, 2, -3, 1}));
    CHECK(make_monic(make({4, 2})) == make({2, 1}));
}

TEST_CASE("log slope and Cauchy transform") {
    const ExactPolynomial p = from_roots({Rational(1), Rational(3)}, Rational(5));
    // p'/p at 4 = 1/(4-1) + 1/(4-3).
    CHECK(log_slope(p, Rational(4)) == Rational(4, 3));
    CHECK(cauchy_transform(p, Rational(4)) == Rational(2, 3));
    CHECK_THROWS_AS(log_slope(p, Rational(3)), std::domain_error);
}

TEST_CASE("float bridge") {
    const ExactPolynomial p = make({2, -3, 1});
    const FloatPolynomial f = to_float(p);
    CHECK(evaluate(f, 4.0) == 6.0);
    CHECK(to_exact(f) == p);
    CHECK(log_slope(f, 4.0) == doctest::Approx(5.0 / 6.0));
    CHECK(cauchy_transform(f, 4.0) == doctest::Approx(5.0 / 12.0));
}
