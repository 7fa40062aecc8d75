#pragma once

#include "ffr/polynomial.hpp"
#include "ffr/roots.hpp"

namespace ffr {

// Linearized W: p (x^n p) - zeta^2 p' (x^n p)'. Only zeta^2 enters.
ExactPolynomial linear_w(const ExactPolynomial& p, int n, const Rational& zeta);
ExactPolynomial linear_w_sq(const ExactPolynomial& p, int n, const Rational& zeta_sq);

// Linearized H: L (n/x + L) with L = [log p]'(x) = p'(x)/p(x).
Rational linear_h(const ExactPolynomial& p, int n, const Rational& x);
double linear_h(const ExactPolynomial& p, int n, double x);

// Largest root of the linearized W; linear_h(p, n, linear_maxroot) = 1/zeta^2.
RootInterval linear_maxroot_interval(const ExactPolynomial& p, int n,
                                     const Rational& zeta_sq, const Rational& width);
double linear_maxroot(const ExactPolynomial& p, int n, const Rational& zeta,
                      const RootIsolationConfig& cfg = {});
double linear_maxroot(const ExactPolynomial& p, int n, double zeta,
                      const RootIsolationConfig& cfg = {});

// Pinch of the root pair (a, b) about the pivot t, for 0 <= a < b < t:
//
//   mu  = t - 2 (t-a)(t-b) / (2t - a - b)        (harmonic-mean step),
//   kappa = 2 mu - a - b,
//   rho = (mu^2 - ab) / kappa,
//
// which satisfy a < mu < b < rho < t, kappa > 0, and the exact identity
// (x - mu)^2 + kappa (x - rho) = (x - a)(x - b) for any t.
struct PinchPoint {
    Rational mu;
    Rational kappa;
    Rational rho;
};

PinchPoint pinch_at_point(const Rational& a, const Rational& b, const Rational& t);

// p = p_tilde + p_hat with p_tilde = c (x - mu)^2 r and p_hat = c kappa (x - rho) r,
// where (a, b) are the two largest distinct roots of p, r is the cofactor, and
// c the leading coefficient. The sum identity is exact whenever a and b are
// recovered exactly (dyadic roots are); the pivot t may be any rational
// approximant without disturbing it.
struct PinchDecomposition {
    ExactPolynomial p_tilde;
    ExactPolynomial p_hat;
    Rational a;
    Rational b;
    Rational mu;
    Rational kappa;
    Rational rho;
    Rational t;
    bool roots_exact = false;
};

// Pivot t = maxroot of the linearized W at zeta.
PinchDecomposition linear_pinch(const ExactPolynomial& p, int n, const Rational& zeta,
                                const RootIsolationConfig& cfg = {});
PinchDecomposition linear_pinch(const ExactPolynomial& p, int n, double zeta,
                                const RootIsolationConfig& cfg = {});

// Pivot t = t0^2 where t0 = maxroot of W^n_alpha(p), reached through the
// self-consistent linearization zeta = 2 alpha t0; the consistency
// maxroot(linear W at zeta) = t0^2 is verified to 1e-8 before pinching.
PinchDecomposition quad_pinch(const ExactPolynomial& p, int n, const Rational& alpha,
                              const RootIsolationConfig& cfg = {});
PinchDecomposition quad_pinch(const ExactPolynomial& p, int n, double alpha,
                              const RootIsolationConfig& cfg = {});

}  // namespace ffr
