#include "ffr/gegenbauer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace ffr {

namespace {

void validate_alpha(const Rational& alpha) {
    if (sgn(alpha) <= 0) throw std::invalid_argument("gegenbauer: alpha must be positive");
}

}  // namespace

ExactPolynomial geg_coeffs(int d, const Rational& alpha) {
    if (d < 0) throw std::invalid_argument("geg_coeffs: d must be >= 0");
    validate_alpha(alpha);
    ExactPolynomial prev = ExactPolynomial::constant(1);
    if (d == 0) return prev;
    ExactPolynomial cur = ExactPolynomial::monomial(1, 2 * alpha);
    for (int m = 1; m < d; ++m) {
        ExactPolynomial next =
            (2 * (m + alpha)) * shift_up(cur, 1) - (m + 2 * alpha - 1) * prev;
        next = (Rational(1) / (m + 1)) * next;
        prev = cur;
        cur = next;
    }
    return cur;
}

double geg_eval(int d, double alpha, double x) {
    if (d < 0) throw std::invalid_argument("geg_eval: d must be >= 0");
    if (alpha <= 0) throw std::invalid_argument("geg_eval: alpha must be positive");
    double prev = 1.0;
    if (d == 0) return prev;
    double cur = 2 * alpha * x;
    for (int m = 1; m < d; ++m) {
        const double next = (2 * (m + alpha) * x * cur - (m + 2 * alpha - 1) * prev) / (m + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational geg_at_one(int d, const Rational& alpha) {
    if (d < 0) throw std::invalid_argument("geg_at_one: d must be >= 0");
    validate_alpha(alpha);
    Rational value(1);
    for (int i = 0; i < d; ++i) value *= (2 * alpha + i) / Rational(i + 1);
    return value;
}

Rational geg_cauchy_at_one(int d, const Rational& alpha) {
    if (d < 1) throw std::invalid_argument("geg_cauchy_at_one: d must be >= 1");
    validate_alpha(alpha);
    return (d + 2 * alpha) / (2 * alpha + 1);
}

double diff_identity_residual(int d, double alpha, double x) {
    if (d < 1) throw std::invalid_argument("diff_identity_residual: d must be >= 1");
    if (alpha <= 0) throw std::invalid_argument("diff_identity_residual: alpha must be positive");
    double prev = 1.0, dprev = 0.0;
    double cur = 2 * alpha * x, dcur = 2 * alpha;
    for (int m = 1; m < d; ++m) {
        const double next = (2 * (m + alpha) * x * cur - (m + 2 * alpha - 1) * prev) / (m + 1);
        const double dnext =
            (2 * (m + alpha) * (cur + x * dcur) - (m + 2 * alpha - 1) * dprev) / (m + 1);
        prev = cur;
        dprev = dcur;
        cur = next;
        dcur = dnext;
    }
    return (1 - x * x) * dcur + d * x * cur - (d + 2 * alpha - 1) * prev;
}

ExactPolynomial diff_identity_poly(int d, const Rational& alpha) {
    if (d < 1) throw std::invalid_argument("diff_identity_poly: d must be >= 1");
    validate_alpha(alpha);
    const ExactPolynomial cd = geg_coeffs(d, alpha);
    const ExactPolynomial cdm1 = geg_coeffs(d - 1, alpha);
    ExactPolynomial one_minus_x2;
    one_minus_x2.coeffs = {Rational(1), Rational(0), Rational(-1)};
    return one_minus_x2 * derivative(cd) + Rational(d) * shift_up(cd, 1) -
           (d + 2 * alpha - 1) * cdm1;
}

double gamma_theta(double theta) {
    if (theta < 0) throw std::invalid_argument("gamma_theta: theta must be >= 0");
    return std::sqrt(2 * theta + 1) / (theta + 1);
}

Rational gamma_theta_sq(const Rational& theta) {
    if (sgn(theta) < 0) throw std::invalid_argument("gamma_theta_sq: theta must be >= 0");
    return (2 * theta + 1) / ((theta + 1) * (theta + 1));
}

ThetaRatio theta_ratio(double theta) { return {theta, gamma_theta(theta)}; }

namespace {

struct ChainProbe {
    int roots_above = 0;
    bool at_root = false;
};

// Consecutive degrees interlace, so the sequence (C_0(x), ..., C_d(x)) reverses
// sign strictly across each interior zero and its sign variations count the
// roots of C_d strictly above x. One O(d) pass replaces a Sturm isolation.
ChainProbe probe_chain(int d, const Rational& alpha, const Rational& x) {
    ChainProbe out;
    int last = 1;
    const auto absorb = [&](const Rational& value) {
        const int s = sgn(value);
        if (s != 0 && s != last) {
            ++out.roots_above;
            last = s;
        }
    };
    Rational prev(1);
    Rational cur = 2 * alpha * x;
    absorb(cur);
    for (int m = 1; m < d; ++m) {
        const Rational next =
            (2 * (m + alpha) * x * cur - (m + 2 * alpha - 1) * prev) / (m + 1);
        prev = cur;
        cur = next;
        absorb(cur);
    }
    out.at_root = sgn(cur) == 0;
    return out;
}

Rational snap_up(const Rational& x, const Integer& scale) {
    const Integer num = x.get_num() * scale;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Rational out(q, scale);
    out.canonicalize();
    return out;
}

Rational snap_down(const Rational& x, const Integer& scale) {
    const Integer num = x.get_num() * scale;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Rational out(q, scale);
    out.canonicalize();
    return out;
}

// Double-precision bisection on the normalized chain (bounded by 1 on [-1, 1])
// to seed the certified bracket. Accuracy is best effort; the exact probes
// repair any miss.
double chain_guess(int d, double af) {
    const auto variations = [&](double x) {
        int count = 0;
        int last = 1;
        const auto absorb = [&](double v) {
            if (v > 0 && last < 0) {
                ++count;
                last = 1;
            } else if (v < 0 && last > 0) {
                ++count;
                last = -1;
            }
        };
        double prev = 1.0;
        double cur = x;
        absorb(cur);
        for (int m = 1; m < d; ++m) {
            const double next = (2 * (m + af) * x * cur - m * prev) / (m + 2 * af);
            prev = cur;
            cur = next;
            absorb(cur);
        }
        return count;
    };
    double lo = -0.125;
    double hi = 1.0;
    for (int it = 0; it < 64 && hi - lo > 1e-13; ++it) {
        const double mid = (lo + hi) / 2;
        if (variations(mid) == 0)
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace

RootInterval geg_maxroot_interval(int d, const Rational& alpha, const Rational& width) {
    if (d < 1) throw std::invalid_argument("geg_maxroot: d must be >= 1");
    validate_alpha(alpha);
    if (sgn(width) <= 0) throw std::invalid_argument("geg_maxroot: width must be positive");

    int prec = 20;
    while (prec < 256 && (Integer(1) << prec) * width < 8) ++prec;
    const Integer scale = Integer(1) << prec;
    const int pad_exp = std::min(prec, 36);
    const Rational pad(Integer(1), Integer(1) << pad_exp);

    const Rational guess = rational_from_double(chain_guess(d, to_double(alpha)));
    Rational hi = snap_up(guess + pad, scale);
    Rational lo = snap_down(guess - pad, scale);

    Rational step = pad;
    ChainProbe top = probe_chain(d, alpha, hi);
    for (int it = 0; top.roots_above != 0 && it < 64; ++it) {
        hi = snap_up(hi + step, scale);
        step *= 2;
        top = probe_chain(d, alpha, hi);
    }
    if (top.roots_above != 0) return max_real_root_interval(geg_coeffs(d, alpha), width);
    if (top.at_root) return {hi, hi, true};

    step = pad;
    ChainProbe bot = probe_chain(d, alpha, lo);
    for (int it = 0; bot.roots_above == 0 && it < 64; ++it) {
        if (bot.at_root) return {lo, lo, true};
        lo = snap_down(lo - step, scale);
        step *= 2;
        bot = probe_chain(d, alpha, lo);
    }
    if (bot.roots_above == 0) return max_real_root_interval(geg_coeffs(d, alpha), width);

    for (int it = 0; hi - lo > width && it < 600; ++it) {
        const Rational mid = (lo + hi) / 2;
        const ChainProbe p = probe_chain(d, alpha, mid);
        if (p.roots_above == 0) {
            if (p.at_root) return {mid, mid, true};
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {lo, hi, false};
}

double geg_maxroot(int d, const Rational& alpha, const RootIsolationConfig& cfg) {
    Rational width(Integer(1), Integer(1) << 48);
    if (cfg.abs_tol > 0 && cfg.abs_tol < to_double(width))
        width = rational_from_double(cfg.abs_tol);
    return to_double(geg_maxroot_interval(d, alpha, width).midpoint());
}

TwoStepMaxroot two_step_maxroot(int d, const Rational& theta,
                                const RootIsolationConfig& cfg) {
    if (d < 1) throw std::invalid_argument("two_step_maxroot: d must be >= 1");
    if (sgn(theta) < 0) throw std::invalid_argument("two_step_maxroot: theta must be >= 0");
    const double a = geg_maxroot(d, 1 + theta * d, cfg);
    const double b = geg_maxroot(d + 1, 1 + theta * (d + 1), cfg);
    return {d, to_double(theta), std::max(a, b)};
}

double asymptotic_density(double theta, double y) {
    if (theta <= 0) throw std::invalid_argument("asymptotic_density: theta must be positive");
    const double g = gamma_theta(theta);
    if (std::abs(y) >= g) return 0.0;
    return (1 + theta) / std::numbers::pi * std::sqrt(g * g - y * y) / (1 - y * y);
}

double asymptotic_cauchy(double theta, double x) {
    if (theta < 0) throw std::invalid_argument("asymptotic_cauchy: theta must be >= 0");
    const double g = gamma_theta(theta);
    if (x <= g) throw std::domain_error("asymptotic_cauchy: x must exceed gamma_theta");
    return (2 * theta + 1) / (theta * x + (1 + theta) * std::sqrt(x * x - g * g));
}

double cauchy_upper_bound(int n, int d, double x) {
    if (d < 1) throw std::invalid_argument("cauchy_upper_bound: d must be >= 1");
    if (n < 0) throw std::invalid_argument("cauchy_upper_bound: n must be >= 0");
    if (x <= gamma_theta(static_cast<double>(n) / d))
        throw std::domain_error("cauchy_upper_bound: x must exceed gamma_{n/d}");
    const double m = n + d;
    return (2 * n + d) / (n * x + std::sqrt(m * m * (x * x - 1) + double(n) * n));
}

bool cauchy_bound_certificate(int n, int d, const Rational& x) {
    if (d < 1) throw std::invalid_argument("cauchy_bound_certificate: d must be >= 1");
    if (n < 0) throw std::invalid_argument("cauchy_bound_certificate: n must be >= 0");
    const Rational gamma2 = gamma_theta_sq(Rational(n) / d);
    if (sgn(x) <= 0 || x * x <= gamma2)
        throw std::domain_error("cauchy_bound_certificate: x must exceed gamma_{n/d}");
    const ExactPolynomial p = geg_coeffs(d, Rational(n + 1));
    const Rational c = cauchy_transform(p, x);
    // c <= (2n+d)/(n x + sqrt(u)) with u = (n+d)^2 (x^2-1) + n^2, i.e.
    // (2n+d) - c n x - c sqrt(u) >= 0 (the denominator is positive on the domain).
    const Rational u = Rational((n + d)) * (n + d) * (x * x - 1) + Rational(n) * n;
    return compare_with_surd(Rational(2 * n + d) - c * n * x, Rational(0), c, u) >= 0;
}

double ans_f(double x, double y, int n, int d) {
    return d * (x * x - 1) * y * y + 2.0 * n * x * y - (2 * n + d);
}

bool ans_check(double s, double t, int n, int d) {
    if (d < 1) throw std::invalid_argument("ans_check: d must be >= 1");
    if (n < 0) throw std::invalid_argument("ans_check: n must be >= 0");
    if (t <= 0) throw std::domain_error("ans_check: t must be positive");
    const Rational sx = rational_from_double(s);
    const Rational ty = rational_from_double(t);
    const Rational gamma2 = gamma_theta_sq(Rational(n) / d);
    if (sgn(sx) <= 0 || sx * sx <= gamma2)
        throw std::domain_error("ans_check: s must exceed gamma_{n/d}");
    const Rational f =
        Rational(d) * (sx * sx - 1) * ty * ty + Rational(2 * n) * sx * ty - (2 * n + d);
    if (sgn(f) < 0) return true;
    const Rational c = cauchy_transform(geg_coeffs(d, Rational(n + 1)), sx);
    return c <= ty;
}

double normalized_geg(int j, int k, double theta, double x) {
    if (j < 0) throw std::invalid_argument("normalized_geg: j must be >= 0");
    if (theta < 0 || k < 0) throw std::invalid_argument("normalized_geg: bad parameters");
    const double alpha = 1 + theta * k;
    double prev = 1.0;
    if (j == 0) return prev;
    double cur = x;
    for (int m = 1; m < j; ++m) {
        const double next = (2 * (m + alpha) * x * cur - m * prev) / (m + 2 * alpha);
        prev = cur;
        cur = next;
    }
    return cur;
}

ExactPolynomial normalized_geg_poly(int j, int k, const Rational& theta) {
    if (j < 0) throw std::invalid_argument("normalized_geg_poly: j must be >= 0");
    if (sgn(theta) < 0 || k < 0)
        throw std::invalid_argument("normalized_geg_poly: bad parameters");
    const Rational alpha = 1 + theta * k;
    return (Rational(1) / geg_at_one(j, alpha)) * geg_coeffs(j, alpha);
}

Rational lambda_jk(int j, int k, const Rational& theta) {
    if (j < 0 || k < 0) throw std::invalid_argument("lambda_jk: indices must be >= 0");
    if (sgn(theta) < 0) throw std::invalid_argument("lambda_jk: theta must be >= 0");
    return (j + 2 * k * theta + 2) / (2 * j + 2 * k * theta + 2);
}

ExactPolynomial delta_poly_exact(int j, int d, const Rational& theta) {
    if (j < 1 || j > d) throw std::invalid_argument("delta_poly: need 1 <= j <= d");
    if (sgn(theta) < 0) throw std::invalid_argument("delta_poly: theta must be >= 0");
    return normalized_geg_poly(j + 1, d + 1, theta) * normalized_geg_poly(j - 1, d, theta) -
           normalized_geg_poly(j, d, theta) * normalized_geg_poly(j, d + 1, theta);
}

FloatPolynomial delta_poly(int j, int d, double theta) {
    return to_float(delta_poly_exact(j, d, rational_from_double(theta)));
}

bool fitness_check(const FloatPolynomial& p, double beta, const FitnessConfig& cfg) {
    if (cfg.grid_points < 1 || cfg.x_max <= 1)
        throw std::invalid_argument("fitness_check: bad grid configuration");
    if (!(beta < 1)) throw std::invalid_argument("fitness_check: beta must be < 1");
    const int g = cfg.grid_points;
    for (int i = 1; i <= g; ++i) {
        const double x = beta + (1 - beta) * i / (g + 1);
        if (!(evaluate(p, x) < 0)) return false;
    }
    for (int i = 1; i <= g; ++i) {
        const double x = 1 + (cfg.x_max - 1) * i / g;
        if (!(evaluate(p, x) > 0)) return false;
    }
    return true;
}

FitnessReport fitness_check_certified(const ExactPolynomial& p, const Rational& beta,
                                      const FitnessConfig& cfg) {
    FitnessReport report;
    report.grid_pass = fitness_check(to_float(p), to_double(beta), cfg);

    const SturmChain chain(p);
    const Rational one(1);
    const Rational xmax = rational_from_double(cfg.x_max);
    const bool one_is_root = sgn(evaluate(chain.squarefree(), one)) == 0;
    const int expected_left = one_is_root ? 1 : 0;
    const bool no_interior_left = chain.count(beta, one) == expected_left;
    const bool no_interior_right = chain.count(one, xmax) == 0;
    const Rational left_sample = (beta + one) / 2;
    const Rational right_sample = (one + xmax) / 2;
    report.certified = no_interior_left && no_interior_right &&
                       sgn(evaluate(p, left_sample)) < 0 &&
                       sgn(evaluate(p, right_sample)) > 0;
    return report;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
    const double m = (a + b) / 2;
    const double lm = (a + m) / 2;
    const double rm = (m + b) / 2;
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15 * tol) return left + right + delta / 15;
    if (depth <= 0)
        throw std::runtime_error("quadrature_cauchy: tolerance not reached");
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace

double quadrature_cauchy(double theta, double x, double tol) {
    if (theta <= 0) throw std::invalid_argument("quadrature_cauchy: theta must be positive");
    if (tol <= 0) throw std::invalid_argument("quadrature_cauchy: tol must be positive");
    const double g = gamma_theta(theta);
    if (x <= g) throw std::domain_error("quadrature_cauchy: x must exceed gamma_theta");
    // z = g sin u turns mu(z)/(x - z) dz into a smooth integrand on [-pi/2, pi/2].
    const auto f = [&](double u) {
        const double s = std::sin(u);
        const double c = std::cos(u);
        return (1 + theta) / std::numbers::pi * g * g * c * c /
               ((1 - g * g * s * s) * (x - g * s));
    };
    const double a = -std::numbers::pi / 2;
    const double b = std::numbers::pi / 2;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.0);
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

double geg_cauchy_ratio(int d, double alpha, double x) {
    if (d < 1) throw std::invalid_argument("geg_cauchy_ratio: d must be >= 1");
    if (alpha <= 0) throw std::invalid_argument("geg_cauchy_ratio: alpha must be positive");
    if (x == 1 || x == -1)
        throw std::domain_error("geg_cauchy_ratio: x = +-1 is outside the ratio form");
    double rho = 2 * alpha * x;
    for (int j = 1; j < d; ++j) {
        if (rho == 0) throw std::domain_error("geg_cauchy_ratio: ratio hit a root");
        rho = (2 * (j + alpha) * x - (j + 2 * alpha - 1) / rho) / (j + 1);
    }
    if (rho == 0) throw std::domain_error("geg_cauchy_ratio: ratio hit a root");
    return (d * x - (d + 2 * alpha - 1) / rho) / (d * (x * x - 1));
}

}  // namespace ffr
