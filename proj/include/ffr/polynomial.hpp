// Dense polynomial arithmetic over exact rationals and over doubles.
//
// Coefficients are stored in ascending degree order: coeffs[i] multiplies x^i.
// The zero polynomial is the empty vector; any nonzero polynomial keeps a
// nonzero last coefficient.
#pragma once

#include "ffr/rational.hpp"

#include <vector>

namespace ffr {

struct ExactPolynomial {
    std::vector<Rational> coeffs;

    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<Rational> c) : coeffs(std::move(c)) { normalize(); }

    static ExactPolynomial zero() { return ExactPolynomial{}; }
    static ExactPolynomial constant(const Rational& c);
    // lead * x^degree
    static ExactPolynomial monomial(int degree, const Rational& lead = Rational(1));

    bool is_zero() const { return coeffs.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Rational& lead() const;
    // Coefficient of x^i, 0 beyond the stored range.
    Rational coeff(int i) const;

    void normalize();
};

bool operator==(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial operator*(const Rational& s, const ExactPolynomial& p);

ExactPolynomial from_roots(const std::vector<Rational>& roots, const Rational& leading);
Rational evaluate(const ExactPolynomial& p, const Rational& x);
ExactPolynomial derivative(const ExactPolynomial& p);
ExactPolynomial poly_pow(const ExactPolynomial& p, int e);

struct DivisionResult {
    ExactPolynomial quotient;
    ExactPolynomial remainder;
};
// Euclidean division; divisor must be nonzero.
DivisionResult divide(const ExactPolynomial& num, const ExactPolynomial& den);

// Monic gcd; gcd(0, 0) is 0.
ExactPolynomial poly_gcd(const ExactPolynomial& a, const ExactPolynomial& b);
// p / gcd(p, p'), normalized monic: same distinct roots, all simple.
ExactPolynomial squarefree_part(const ExactPolynomial& p);

// p(x) -> p(x^2)
ExactPolynomial substitute_square(const ExactPolynomial& p);
// p(x) -> x^n p(x)
ExactPolynomial shift_up(const ExactPolynomial& p, int n);
// Divide by the leading coefficient.
ExactPolynomial make_monic(const ExactPolynomial& p);

// p'(x)/p(x); throws on a pole.
Rational log_slope(const ExactPolynomial& p, const Rational& x);
// p'(x)/(deg p * p(x)); requires deg p >= 1.
Rational cauchy_transform(const ExactPolynomial& p, const Rational& x);

struct FloatPolynomial {
    std::vector<double> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    void normalize();
};

double evaluate(const FloatPolynomial& p, double x);
FloatPolynomial derivative(const FloatPolynomial& p);
FloatPolynomial to_float(const ExactPolynomial& p);
ExactPolynomial to_exact(const FloatPolynomial& p);

double log_slope(const FloatPolynomial& p, double x);
double cauchy_transform(const FloatPolynomial& p, double x);

}  // namespace ffr
