#include "ffr/transforms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ffr/convolution.hpp"

namespace ffr {

ExactPolynomial s_transform(const ExactPolynomial& p) { return substitute_square(p); }

ExactPolynomial v_transform(const ExactPolynomial& p, int n) {
    if (n < 0) throw std::invalid_argument("v_transform: n must be >= 0");
    return shift_up(p, n);
}

Rational h_eval(const ExactPolynomial& p, int n, const Rational& x) {
    if (n < 0) throw std::invalid_argument("h_eval: n must be >= 0");
    if (p.is_zero()) throw std::invalid_argument("h_eval: zero polynomial");
    if (n > 0 && sgn(x) <= 0) throw std::domain_error("h_eval: x must be positive");
    const Rational y = x * x;
    const Rational py = evaluate(p, y);
    if (sgn(py) == 0) throw std::domain_error("h_eval: pole at a root of S p");
    const Rational w = 2 * x * evaluate(derivative(p), y) / py;
    Rational h = w * w;
    if (n > 0) h += 2 * n / x * w;
    return h;
}

double h_eval(const ExactPolynomial& p, int n, double x) {
    return to_double(h_eval(p, n, rational_from_double(x)));
}

double h_eval(const FloatPolynomial& p, int n, double x) {
    if (n < 0) throw std::invalid_argument("h_eval: n must be >= 0");
    if (p.coeffs.empty()) throw std::invalid_argument("h_eval: zero polynomial");
    if (n > 0 && x <= 0) throw std::domain_error("h_eval: x must be positive");
    const double y = x * x;
    const double py = evaluate(p, y);
    if (py == 0.0) throw std::domain_error("h_eval: pole at a root of S p");
    const double w = 2 * x * evaluate(derivative(p), y) / py;
    double h = w * w;
    if (n > 0) h += 2.0 * n / x * w;
    return h;
}

ExactPolynomial reduced_w(const ExactPolynomial& p, int n, const Rational& alpha_sq) {
    if (n < 0) throw std::invalid_argument("reduced_w: n must be >= 0");
    if (p.is_zero()) throw std::invalid_argument("reduced_w: zero polynomial");
    if (sgn(alpha_sq) <= 0) throw std::invalid_argument("reduced_w: alpha must be positive");
    const ExactPolynomial dp = derivative(p);
    ExactPolynomial y_poly = ExactPolynomial::monomial(1, Rational(1));
    return p * p - (4 * n * alpha_sq) * (p * dp) - (4 * alpha_sq) * (y_poly * dp * dp);
}

RootInterval w_maxroot_sq_interval(const ExactPolynomial& p, int n,
                                   const Rational& alpha_sq, const Rational& width) {
    return max_real_root_interval(reduced_w(p, n, alpha_sq), width);
}

namespace {

WTransformResult build_w(const ExactPolynomial& p, int n, const Rational& alpha_ex,
                         double alpha_fl) {
    if (n < 0) throw std::invalid_argument("w_polynomial: n must be >= 0");
    if (p.is_zero()) throw std::invalid_argument("w_polynomial: zero polynomial");
    if (sgn(alpha_ex) <= 0)
        throw std::invalid_argument("w_polynomial: alpha must be positive");
    WTransformResult out;
    out.n = n;
    out.alpha = alpha_fl;
    out.alpha_sq = alpha_ex * alpha_ex;
    const ExactPolynomial sp = s_transform(p);
    const ExactPolynomial svp = s_transform(v_transform(p, n));
    out.w_poly = sp * svp - out.alpha_sq * (derivative(sp) * derivative(svp));
    out.reduced = reduced_w(p, n, out.alpha_sq);
    out.maxroot_w = std::numeric_limits<double>::quiet_NaN();
    try {
        const RootInterval iv = max_real_root_interval(
            out.reduced, rational_from_double(RootIsolationConfig{}.abs_tol));
        const Rational mid = iv.midpoint();
        if (sgn(mid) >= 0) out.maxroot_w = std::sqrt(to_double(mid));
    } catch (const std::domain_error&) {
    }
    return out;
}

}  // namespace

WTransformResult w_polynomial(const ExactPolynomial& p, int n, const Rational& alpha) {
    return build_w(p, n, alpha, to_double(alpha));
}

WTransformResult w_polynomial(const ExactPolynomial& p, int n, double alpha) {
    return build_w(p, n, rational_from_double(alpha), alpha);
}

namespace {

// Enclosure of maxroot(R) honoring the config, plus the invariant check that
// the root is nonnegative (it always is for nonneg-rooted p).
RootInterval maxroot_sq_checked(const ExactPolynomial& p, int n, const Rational& alpha_sq,
                                const RootIsolationConfig& cfg) {
    if (cfg.abs_tol <= 0 || cfg.rel_tol <= 0)
        throw std::invalid_argument("maxroot_w: tolerances must be positive");
    const RootInterval iv =
        w_maxroot_sq_interval(p, n, alpha_sq, rational_from_double(cfg.abs_tol));
    if (sgn(iv.hi) < 0)
        throw std::runtime_error("maxroot_w: largest root of the reduced form is negative");
    return iv;
}

}  // namespace

double maxroot_w(const ExactPolynomial& p, int n, const Rational& alpha,
                 const RootIsolationConfig& cfg) {
    if (sgn(alpha) <= 0) throw std::invalid_argument("maxroot_w: alpha must be positive");
    const RootInterval iv = maxroot_sq_checked(p, n, alpha * alpha, cfg);
    const Rational mid = iv.midpoint();
    return sgn(mid) <= 0 ? 0.0 : std::sqrt(to_double(mid));
}

double maxroot_w(const ExactPolynomial& p, int n, double alpha,
                 const RootIsolationConfig& cfg) {
    return maxroot_w(p, n, rational_from_double(alpha), cfg);
}

ThetaReport theta(const ExactPolynomial& p, int n, const Rational& alpha,
                  const RootIsolationConfig& cfg) {
    if (sgn(alpha) <= 0) throw std::invalid_argument("theta: alpha must be positive");
    if (!p.is_zero() && p.degree() == 0)
        throw std::domain_error("theta: undefined for constant polynomials");
    const RootInterval iv = maxroot_sq_checked(p, n, alpha * alpha, cfg);
    const Rational mid = iv.midpoint();
    ThetaReport report;
    report.n = n;
    report.d = p.degree();
    report.alpha = to_double(alpha);
    report.maxroot_w = sgn(mid) <= 0 ? 0.0 : std::sqrt(to_double(mid));
    report.theta = std::sqrt(to_double(Rational(n * n) * alpha * alpha + mid));
    return report;
}

ThetaReport theta(const ExactPolynomial& p, int n, double alpha,
                  const RootIsolationConfig& cfg) {
    return theta(p, n, rational_from_double(alpha), cfg);
}

double phi(const ExactPolynomial& p, const ExactPolynomial& q, int n, int k, int d,
           const Rational& alpha, const RootIsolationConfig& cfg) {
    const ExactPolynomial conv = rect_convolve(p, q, {d, k});
    if (conv.degree() <= 0)
        throw std::domain_error("phi: convolution degenerates to a constant");
    const double theta_p = theta(p, n, alpha, cfg).theta;
    const double theta_q = theta(q, n, alpha, cfg).theta;
    const double theta_c = theta(conv, n, alpha, cfg).theta;
    return theta_p + theta_q - theta_c - (k + 2 * d) * to_double(alpha);
}

}  // namespace ffr
