#include "ffr/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace ffr {

ExactPolynomial ExactPolynomial::constant(const Rational& c) {
    ExactPolynomial p;
    if (sgn(c) != 0) p.coeffs.push_back(c);
    return p;
}

ExactPolynomial ExactPolynomial::monomial(int degree, const Rational& lead) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    ExactPolynomial p;
    if (sgn(lead) == 0) return p;
    p.coeffs.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.coeffs.back() = lead;
    return p;
}

const Rational& ExactPolynomial::lead() const {
    if (coeffs.empty()) throw std::invalid_argument("lead: zero polynomial");
    return coeffs.back();
}

Rational ExactPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(i)];
}

void ExactPolynomial::normalize() {
    while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
    return a.coeffs == b.coeffs;
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
    ExactPolynomial out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    out.normalize();
    return out;
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
    ExactPolynomial out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    out.normalize();
    return out;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return ExactPolynomial::zero();
    ExactPolynomial out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (sgn(a.coeffs[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    out.normalize();
    return out;
}

ExactPolynomial operator*(const Rational& s, const ExactPolynomial& p) {
    if (sgn(s) == 0) return ExactPolynomial::zero();
    ExactPolynomial out = p;
    for (auto& c : out.coeffs) c *= s;
    return out;
}

ExactPolynomial from_roots(const std::vector<Rational>& roots, const Rational& leading) {
    if (sgn(leading) == 0) throw std::invalid_argument("from_roots: leading coefficient is zero");
    ExactPolynomial p = ExactPolynomial::constant(leading);
    for (const auto& r : roots) {
        ExactPolynomial factor;
        factor.coeffs = {-r, Rational(1)};
        p = p * factor;
    }
    return p;
}

Rational evaluate(const ExactPolynomial& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ExactPolynomial derivative(const ExactPolynomial& p) {
    ExactPolynomial out;
    if (p.coeffs.size() <= 1) return out;
    out.coeffs.resize(p.coeffs.size() - 1);
    for (std::size_t i = 1; i < p.coeffs.size(); ++i)
        out.coeffs[i - 1] = Rational(static_cast<long>(i)) * p.coeffs[i];
    out.normalize();
    return out;
}

ExactPolynomial poly_pow(const ExactPolynomial& p, int e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    ExactPolynomial out = ExactPolynomial::constant(1);
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
}

DivisionResult divide(const ExactPolynomial& num, const ExactPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("divide: division by zero polynomial");
    DivisionResult res;
    res.remainder = num;
    if (num.degree() < den.degree()) return res;
    res.quotient.coeffs.assign(
        static_cast<std::size_t>(num.degree() - den.degree()) + 1, Rational(0));
    const Rational& lead = den.lead();
    while (!res.remainder.is_zero() && res.remainder.degree() >= den.degree()) {
        const int shift = res.remainder.degree() - den.degree();
        const Rational factor = res.remainder.lead() / lead;
        res.quotient.coeffs[static_cast<std::size_t>(shift)] = factor;
        for (std::size_t i = 0; i < den.coeffs.size(); ++i)
            res.remainder.coeffs[static_cast<std::size_t>(shift) + i] -= factor * den.coeffs[i];
        res.remainder.normalize();
    }
    res.quotient.normalize();
    return res;
}

ExactPolynomial poly_gcd(const ExactPolynomial& a, const ExactPolynomial& b) {
    ExactPolynomial x = a, y = b;
    while (!y.is_zero()) {
        ExactPolynomial r = divide(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return make_monic(x);
}

ExactPolynomial squarefree_part(const ExactPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree() == 0) return ExactPolynomial::constant(1);
    const ExactPolynomial g = poly_gcd(p, derivative(p));
    if (g.degree() == 0) return make_monic(p);
    return make_monic(divide(p, g).quotient);
}

ExactPolynomial substitute_square(const ExactPolynomial& p) {
    ExactPolynomial out;
    if (p.is_zero()) return out;
    out.coeffs.assign(2 * p.coeffs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) out.coeffs[2 * i] = p.coeffs[i];
    return out;
}

ExactPolynomial shift_up(const ExactPolynomial& p, int n) {
    if (n < 0) throw std::invalid_argument("shift_up: negative power");
    if (p.is_zero() || n == 0) return p;
    ExactPolynomial out;
    out.coeffs.assign(p.coeffs.size() + static_cast<std::size_t>(n), Rational(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        out.coeffs[i + static_cast<std::size_t>(n)] = p.coeffs[i];
    return out;
}

ExactPolynomial make_monic(const ExactPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("make_monic: zero polynomial");
    return Rational(Rational(1) / p.lead()) * p;
}

Rational log_slope(const ExactPolynomial& p, const Rational& x) {
    if (p.is_zero()) throw std::invalid_argument("log_slope: zero polynomial");
    const Rational value = evaluate(p, x);
    if (sgn(value) == 0) throw std::domain_error("log_slope: pole at evaluation point");
    return evaluate(derivative(p), x) / value;
}

Rational cauchy_transform(const ExactPolynomial& p, const Rational& x) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_transform: zero polynomial");
    if (p.degree() < 1) throw std::domain_error("cauchy_transform: degree zero polynomial");
    return log_slope(p, x) / Rational(p.degree());
}

void FloatPolynomial::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
}

double evaluate(const FloatPolynomial& p, double x) {
    double acc = 0.0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

FloatPolynomial derivative(const FloatPolynomial& p) {
    FloatPolynomial out;
    if (p.coeffs.size() <= 1) return out;
    out.coeffs.resize(p.coeffs.size() - 1);
    for (std::size_t i = 1; i < p.coeffs.size(); ++i)
        out.coeffs[i - 1] = static_cast<double>(i) * p.coeffs[i];
    out.normalize();
    return out;
}

FloatPolynomial to_float(const ExactPolynomial& p) {
    FloatPolynomial out;
    out.coeffs.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) out.coeffs.push_back(to_double(c));
    out.normalize();
    return out;
}

ExactPolynomial to_exact(const FloatPolynomial& p) {
    ExactPolynomial out;
    out.coeffs.reserve(p.coeffs.size());
    for (double c : p.coeffs) {
        if (!std::isfinite(c)) throw std::invalid_argument("to_exact: non-finite coefficient");
        out.coeffs.push_back(rational_from_double(c));
    }
    out.normalize();
    return out;
}

double log_slope(const FloatPolynomial& p, double x) {
    if (p.is_zero()) throw std::invalid_argument("log_slope: zero polynomial");
    const double value = evaluate(p, x);
    if (value == 0.0) throw std::domain_error("log_slope: pole at evaluation point");
    return evaluate(derivative(p), x) / value;
}

double cauchy_transform(const FloatPolynomial& p, double x) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_transform: zero polynomial");
    if (p.degree() < 1) throw std::domain_error("cauchy_transform: degree zero polynomial");
    return log_slope(p, x) / static_cast<double>(p.degree());
}

}  // namespace ffr
