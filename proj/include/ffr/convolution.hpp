#pragma once

#include "ffr/polynomial.hpp"

namespace ffr {

// Parameters of the rectangular additive convolution on degree-d polynomials.
// k is the rectangularity parameter; k = 0 recovers the square case.
struct ConvolutionParams {
    int d = 1;
    int k = 0;
};

// [x^i (+) x^j] for the (d, k) convolution:
//
//              (k+i)! (k+j)! j! i!
//   ------------------------------------------- y^{i+j-d}   if i + j >= d,
//   (d+k)! d! (i+j-d)! (k+i+j-d)!
//
// and the zero polynomial otherwise. Requires 0 <= i, j <= d.
ExactPolynomial monomial_convolve(int i, int j, const ConvolutionParams& params);

// Bilinear extension of monomial_convolve to arbitrary p, q of degree <= d.
ExactPolynomial rect_convolve(const ExactPolynomial& p, const ExactPolynomial& q,
                              const ConvolutionParams& params);

// [p (+) x^{d-1}] in closed form: (x p''(x) + (k+1) p'(x)) / ((d+k) d).
ExactPolynomial convolve_with_xdm1(const ExactPolynomial& p,
                                   const ConvolutionParams& params);

// (lambda mu)^{d/2} C_d^{n+1}((y - lambda - mu) / (2 sqrt(lambda mu))) / binom(n+d, d),
// the closed form of [(x-lambda)^d (+) (x-mu)^d] under the (d, n) convolution.
// Although the formula mixes radicals, the half powers of lambda*mu cancel
// against the even/odd parts of the Gegenbauer polynomial, so the result is a
// rational polynomial for every positive rational lambda, mu; the exact
// variant exploits that, the float variant rounds it.
FloatPolynomial basic_convolution_gegenbauer(const Rational& lambda, const Rational& mu,
                                             int d, int n);
ExactPolynomial basic_convolution_gegenbauer_exact(const Rational& lambda,
                                                   const Rational& mu, int d, int n);

// Degree-d Taylor coefficient in t of ((1 + mu t)(1 + lambda t) - y t)^{-(k+1)},
// as a polynomial in y. Equals binom(k+d, d) * [(x-lambda)^d (+) (x-mu)^d].
ExactPolynomial gf_coefficient(const Rational& lambda, const Rational& mu, int k, int d);

}  // namespace ffr
