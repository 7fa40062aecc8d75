#include "ffr/pinching.hpp"

#include <cmath>
#include <stdexcept>

#include "ffr/transforms.hpp"

namespace ffr {

ExactPolynomial linear_w_sq(const ExactPolynomial& p, int n, const Rational& zeta_sq) {
    if (n < 0) throw std::invalid_argument("linear_w: n must be >= 0");
    if (p.is_zero()) throw std::invalid_argument("linear_w: zero polynomial");
    if (sgn(zeta_sq) <= 0) throw std::invalid_argument("linear_w: zeta must be positive");
    const ExactPolynomial q = shift_up(p, n);
    return p * q - zeta_sq * (derivative(p) * derivative(q));
}

ExactPolynomial linear_w(const ExactPolynomial& p, int n, const Rational& zeta) {
    if (sgn(zeta) <= 0) throw std::invalid_argument("linear_w: zeta must be positive");
    return linear_w_sq(p, n, zeta * zeta);
}

Rational linear_h(const ExactPolynomial& p, int n, const Rational& x) {
    if (n < 0) throw std::invalid_argument("linear_h: n must be >= 0");
    if (p.is_zero()) throw std::invalid_argument("linear_h: zero polynomial");
    if (n > 0 && sgn(x) <= 0) throw std::domain_error("linear_h: x must be positive");
    const Rational px = evaluate(p, x);
    if (sgn(px) == 0) throw std::domain_error("linear_h: pole at a root of p");
    const Rational slope = evaluate(derivative(p), x) / px;
    Rational h = slope * slope;
    if (n > 0) h += Rational(n) / x * slope;
    return h;
}

double linear_h(const ExactPolynomial& p, int n, double x) {
    return to_double(linear_h(p, n, rational_from_double(x)));
}

RootInterval linear_maxroot_interval(const ExactPolynomial& p, int n,
                                     const Rational& zeta_sq, const Rational& width) {
    return max_real_root_interval(linear_w_sq(p, n, zeta_sq), width);
}

double linear_maxroot(const ExactPolynomial& p, int n, const Rational& zeta,
                      const RootIsolationConfig& cfg) {
    if (sgn(zeta) <= 0) throw std::invalid_argument("linear_maxroot: zeta must be positive");
    if (cfg.abs_tol <= 0) throw std::invalid_argument("linear_maxroot: bad tolerance");
    const RootInterval iv = linear_maxroot_interval(p, n, zeta * zeta,
                                                    rational_from_double(cfg.abs_tol));
    return to_double(iv.midpoint());
}

double linear_maxroot(const ExactPolynomial& p, int n, double zeta,
                      const RootIsolationConfig& cfg) {
    return linear_maxroot(p, n, rational_from_double(zeta), cfg);
}

PinchPoint pinch_at_point(const Rational& a, const Rational& b, const Rational& t) {
    if (a == b) throw std::invalid_argument("pinch_at_point: a = b is a basic pair");
    if (sgn(a) < 0 || a > b || b >= t)
        throw std::invalid_argument("pinch_at_point: need 0 <= a < b < t");
    PinchPoint out;
    out.mu = t - 2 * (t - a) * (t - b) / (2 * t - a - b);
    out.kappa = 2 * out.mu - a - b;
    out.rho = (out.mu * out.mu - a * b) / out.kappa;
    return out;
}

namespace {

struct PinchSetup {
    Rational lead;
    ExactPolynomial monic;
    RootInterval b_iv;
    RootInterval a_iv;
};

PinchSetup prepare_pinch(const ExactPolynomial& p, const Rational& width) {
    if (p.is_zero() || p.degree() < 2)
        throw std::invalid_argument("pinch: polynomial of degree >= 2 required");
    if (squarefree_part(p).degree() == 1)
        throw std::invalid_argument("pinch undefined for basic polynomials");
    if (!is_nonneg_rooted(p).nonneg_rooted)
        throw std::invalid_argument("pinch: polynomial must have nonnegative real roots");
    PinchSetup s;
    s.lead = p.lead();
    s.monic = make_monic(p);
    s.b_iv = max_real_root_interval(s.monic, width);
    s.a_iv = s.b_iv.exact
                 ? max_real_root_interval_below(s.monic, s.b_iv.hi, width)
                 : max_real_root_interval_upto(s.monic, s.b_iv.lo, width);
    return s;
}

PinchDecomposition assemble(const PinchSetup& s, const Rational& pivot) {
    PinchDecomposition out;
    out.a = s.a_iv.midpoint();
    out.b = s.b_iv.midpoint();
    out.t = pivot;
    out.roots_exact = s.a_iv.exact && s.b_iv.exact;

    ExactPolynomial pair = from_roots({out.a, out.b}, Rational(1));
    const DivisionResult div = divide(s.monic, pair);
    if (out.roots_exact && !div.remainder.is_zero())
        throw std::runtime_error("pinch: exact roots left a nonzero cofactor remainder");

    const PinchPoint pp = pinch_at_point(out.a, out.b, pivot);
    out.mu = pp.mu;
    out.kappa = pp.kappa;
    out.rho = pp.rho;

    const ExactPolynomial mu_sq =
        from_roots({out.mu, out.mu}, Rational(1));
    ExactPolynomial rho_lin = from_roots({out.rho}, Rational(1));
    out.p_tilde = s.lead * (mu_sq * div.quotient);
    out.p_hat = (s.lead * out.kappa) * (rho_lin * div.quotient);
    return out;
}

// The tighter of the configured tolerance and 2^-66; a dyadic width keeps the
// bisection lattice dyadic, so grid roots are recovered exactly.
Rational pinch_width(const RootIsolationConfig& cfg) {
    if (cfg.abs_tol <= 0) throw std::invalid_argument("pinch: bad tolerance");
    const Rational floor = Rational(1) / (Integer(1) << 66);
    const Rational configured = rational_from_double(cfg.abs_tol);
    return configured < floor ? configured : floor;
}

}  // namespace

PinchDecomposition linear_pinch(const ExactPolynomial& p, int n, const Rational& zeta,
                                const RootIsolationConfig& cfg) {
    if (sgn(zeta) <= 0) throw std::invalid_argument("linear_pinch: zeta must be positive");
    const Rational width = pinch_width(cfg);
    const PinchSetup s = prepare_pinch(p, width);
    const RootInterval t_iv = linear_maxroot_interval(s.monic, n, zeta * zeta, width);
    return assemble(s, t_iv.midpoint());
}

PinchDecomposition linear_pinch(const ExactPolynomial& p, int n, double zeta,
                                const RootIsolationConfig& cfg) {
    return linear_pinch(p, n, rational_from_double(zeta), cfg);
}

PinchDecomposition quad_pinch(const ExactPolynomial& p, int n, const Rational& alpha,
                              const RootIsolationConfig& cfg) {
    if (sgn(alpha) <= 0) throw std::invalid_argument("quad_pinch: alpha must be positive");
    const Rational width = pinch_width(cfg);
    const PinchSetup s = prepare_pinch(p, width);
    const RootInterval t0_sq_iv =
        w_maxroot_sq_interval(s.monic, n, alpha * alpha, width);
    const Rational t0_sq = t0_sq_iv.midpoint();
    if (sgn(t0_sq) <= 0)
        throw std::runtime_error("quad_pinch: nonpositive W maxroot");

    // zeta = 2 alpha t0 enters only as zeta^2 = 4 alpha^2 t0^2, which is rational.
    const Rational zeta_sq = 4 * alpha * alpha * t0_sq;
    const RootInterval lin_iv = linear_maxroot_interval(s.monic, n, zeta_sq, width);
    const Rational lin = lin_iv.midpoint();
    const Rational residual = abs(lin - t0_sq);
    Rational scale = abs(t0_sq);
    if (scale < 1) scale = 1;
    if (to_double(residual / scale) > 1e-8)
        throw std::runtime_error(
            "quad_pinch: linearized pivot failed to match the W maxroot");
    return assemble(s, lin);
}

PinchDecomposition quad_pinch(const ExactPolynomial& p, int n, double alpha,
                              const RootIsolationConfig& cfg) {
    return quad_pinch(p, n, rational_from_double(alpha), cfg);
}

}  // namespace ffr
