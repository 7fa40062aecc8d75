#pragma once

#include <optional>

#include "ffr/polynomial.hpp"
#include "ffr/roots.hpp"

namespace ffr {

// [S p](x) = p(x^2).
ExactPolynomial s_transform(const ExactPolynomial& p);

// [V_n p](x) = x^n p(x).
ExactPolynomial v_transform(const ExactPolynomial& p, int n);

// H-transform value w (2n/x + w) with w = [log S p]'(x) = 2x p'(x^2)/p(x^2).
// Defined for x above the square root of the largest root of p; evaluating at
// a root of S p is a pole, and x <= 0 with n > 0 has no meaning.
Rational h_eval(const ExactPolynomial& p, int n, const Rational& x);
double h_eval(const ExactPolynomial& p, int n, double x);
double h_eval(const FloatPolynomial& p, int n, double x);

// W = [S p][S V_n p] - alpha^2 [S p]' [S V_n p]'. Only alpha^2 enters, so the
// whole construction stays in exact rationals even for float alpha (via its
// exact binary image). reduced is the half-degree form R with
// W(x) = x^{2n} R(x^2):
//
//   R(y) = p(y)^2 - 4 n alpha^2 p(y) p'(y) - 4 y alpha^2 p'(y)^2.
//
// maxroot_w = sqrt(maxroot R); NaN when R has no nonnegative real root (which
// cannot happen for real-rooted p).
struct WTransformResult {
    ExactPolynomial w_poly;
    ExactPolynomial reduced;
    int n = 0;
    double alpha = 1.0;
    Rational alpha_sq;
    double maxroot_w = 0.0;
};

WTransformResult w_polynomial(const ExactPolynomial& p, int n, const Rational& alpha);
WTransformResult w_polynomial(const ExactPolynomial& p, int n, double alpha);

// R alone, and a certified enclosure of its largest root (the square of the
// largest root of W).
ExactPolynomial reduced_w(const ExactPolynomial& p, int n, const Rational& alpha_sq);
RootInterval w_maxroot_sq_interval(const ExactPolynomial& p, int n,
                                   const Rational& alpha_sq, const Rational& width);

double maxroot_w(const ExactPolynomial& p, int n, const Rational& alpha,
                 const RootIsolationConfig& cfg = {});
double maxroot_w(const ExactPolynomial& p, int n, double alpha,
                 const RootIsolationConfig& cfg = {});

struct ThetaReport {
    double theta = 0.0;
    double maxroot_w = 0.0;
    std::optional<double> phi;
    int n = 0;
    std::optional<int> k;
    int d = 0;
    double alpha = 1.0;
};

// Theta = sqrt(n^2 alpha^2 + maxroot_w^2), computed from the enclosure of
// maxroot(R) so no squaring of an already-rounded root is involved.
ThetaReport theta(const ExactPolynomial& p, int n, const Rational& alpha,
                  const RootIsolationConfig& cfg = {});
ThetaReport theta(const ExactPolynomial& p, int n, double alpha,
                  const RootIsolationConfig& cfg = {});

// phi = Theta(p) + Theta(q) - Theta(p (+) q) - (k + 2d) alpha under the (d, k)
// convolution, all three Theta values with the same n and alpha.
double phi(const ExactPolynomial& p, const ExactPolynomial& q, int n, int k, int d,
           const Rational& alpha, const RootIsolationConfig& cfg = {});

}  // namespace ffr
