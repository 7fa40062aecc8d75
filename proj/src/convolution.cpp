#include "ffr/convolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffr {

namespace {

void validate(const ConvolutionParams& params) {
    if (params.d < 1) throw std::invalid_argument("ConvolutionParams: d must be >= 1");
    if (params.k < 0) throw std::invalid_argument("ConvolutionParams: k must be >= 0");
}

// The factorial ratio of the monomial formula, regrouped into binomials:
//
//   binom(j, i+j-d) binom(k+j, d-i) / (binom(d, i) binom(d+k, d-i))
//
// which keeps intermediates near the size of the answer.
Rational monomial_coefficient(int i, int j, const ConvolutionParams& params) {
    const int a = i + j - params.d;
    return binomial(j, a) * binomial(params.k + j, params.d - i) /
           (binomial(params.d, i) * binomial(params.d + params.k, params.d - i));
}

}  // namespace

ExactPolynomial monomial_convolve(int i, int j, const ConvolutionParams& params) {
    validate(params);
    if (i < 0 || i > params.d || j < 0 || j > params.d)
        throw std::invalid_argument("monomial_convolve: exponent out of [0, d]");
    if (i + j < params.d) return ExactPolynomial::zero();
    return ExactPolynomial::monomial(i + j - params.d, monomial_coefficient(i, j, params));
}

ExactPolynomial rect_convolve(const ExactPolynomial& p, const ExactPolynomial& q,
                              const ConvolutionParams& params) {
    validate(params);
    if (p.degree() > params.d || q.degree() > params.d)
        throw std::invalid_argument("rect_convolve: operand degree exceeds d");
    ExactPolynomial out;
    if (p.is_zero() || q.is_zero()) return out;
    out.coeffs.assign(static_cast<std::size_t>(
                          std::max(p.degree() + q.degree() - params.d + 1, 0)),
                      Rational(0));
    for (int i = 0; i <= p.degree(); ++i) {
        if (sgn(p.coeffs[i]) == 0) continue;
        for (int j = std::max(params.d - i, 0); j <= q.degree(); ++j) {
            if (sgn(q.coeffs[j]) == 0) continue;
            out.coeffs[i + j - params.d] +=
                p.coeffs[i] * q.coeffs[j] * monomial_coefficient(i, j, params);
        }
    }
    out.normalize();
    return out;
}

ExactPolynomial convolve_with_xdm1(const ExactPolynomial& p,
                                   const ConvolutionParams& params) {
    validate(params);
    if (p.degree() > params.d)
        throw std::invalid_argument("convolve_with_xdm1: operand degree exceeds d");
    const ExactPolynomial dp = derivative(p);
    const ExactPolynomial xppp = shift_up(derivative(dp), 1);
    const Rational scale = Rational(1) / (Rational(params.d + params.k) * params.d);
    return scale * (xppp + Rational(params.k + 1) * dp);
}

ExactPolynomial basic_convolution_gegenbauer_exact(const Rational& lambda,
                                                   const Rational& mu, int d, int n) {
    if (sgn(lambda) <= 0 || sgn(mu) <= 0)
        throw std::invalid_argument("basic_convolution_gegenbauer: roots must be positive");
    if (d < 1) throw std::invalid_argument("basic_convolution_gegenbauer: d must be >= 1");
    if (n < 0) throw std::invalid_argument("basic_convolution_gegenbauer: n must be >= 0");

    // G_m(y) = (lambda mu)^{m/2} C_m^{alpha}((y - s) / (2 sqrt(lambda mu))) with
    // s = lambda + mu satisfies a radical-free version of the Gegenbauer
    // recurrence:
    //
    //   (m+1) G_{m+1} = (m+alpha)(y - s) G_m - (m + 2 alpha - 1) lambda mu G_{m-1},
    //   G_0 = 1,  G_1 = alpha (y - s).
    const Rational alpha(n + 1);
    const Rational s = lambda + mu;
    const Rational c = lambda * mu;
    ExactPolynomial shift;
    shift.coeffs = {-s, Rational(1)};
    ExactPolynomial prev = ExactPolynomial::constant(1);
    ExactPolynomial cur = alpha * shift;
    for (int m = 1; m < d; ++m) {
        ExactPolynomial next = (Rational(m) + alpha) * (shift * cur) -
                               (Rational(m) + 2 * alpha - 1) * c * prev;
        next = (Rational(1) / (m + 1)) * next;
        prev = cur;
        cur = next;
    }
    return (Rational(1) / binomial(n + d, d)) * cur;
}

FloatPolynomial basic_convolution_gegenbauer(const Rational& lambda, const Rational& mu,
                                             int d, int n) {
    return to_float(basic_convolution_gegenbauer_exact(lambda, mu, d, n));
}

ExactPolynomial gf_coefficient(const Rational& lambda, const Rational& mu, int k, int d) {
    if (d < 0) throw std::invalid_argument("gf_coefficient: d must be >= 0");
    if (k < 0) throw std::invalid_argument("gf_coefficient: k must be >= 0");

    // (1 + mu t)(1 + lambda t) - y t = 1 + B t + C t^2 with B = lambda + mu - y
    // and C = lambda mu. Differentiating (1 + B t + C t^2)^{-(k+1)} gives
    //
    //   m f_m = -B (m+k) f_{m-1} - C (m+2k) f_{m-2},  f_0 = 1,
    //
    // which walks the Taylor coefficients without any series multiplication.
    ExactPolynomial b;
    b.coeffs = {lambda + mu, Rational(-1)};
    const Rational c = lambda * mu;
    ExactPolynomial prev2 = ExactPolynomial::zero();
    ExactPolynomial prev = ExactPolynomial::constant(1);
    for (int m = 1; m <= d; ++m) {
        ExactPolynomial cur =
            Rational(-(m + k)) * (b * prev) - Rational(m + 2 * k) * c * prev2;
        cur = (Rational(1) / m) * cur;
        prev2 = prev;
        prev = cur;
    }
    return prev;
}

}  // namespace ffr
