#pragma once

#include "ffr/polynomial.hpp"
#include "ffr/roots.hpp"

namespace ffr {

struct GegenbauerParams {
    int d = 0;
    Rational alpha = Rational(1);
};

// Coefficients of C_d^alpha via the three-term recurrence
// (m+1) C_{m+1} = 2(m+alpha) x C_m - (m+2alpha-1) C_{m-1}, C_0 = 1, C_1 = 2 alpha x.
ExactPolynomial geg_coeffs(int d, const Rational& alpha);

// Forward recurrence in doubles.
double geg_eval(int d, double alpha, double x);

// C_d^alpha(1) = (2 alpha)_d / d!.
Rational geg_at_one(int d, const Rational& alpha);

// Cauchy transform of C_d^alpha at 1: (d + 2 alpha)/(2 alpha + 1).
Rational geg_cauchy_at_one(int d, const Rational& alpha);

// (1-x^2) C_d' + d x C_d - (d+2alpha-1) C_{d-1}, identically zero. The float
// version evaluates at a point (recurrence run on (C, C') pairs); the exact
// version returns the residual polynomial itself.
double diff_identity_residual(int d, double alpha, double x);
ExactPolynomial diff_identity_poly(int d, const Rational& alpha);

// gamma_theta = sqrt(2 theta + 1)/(theta + 1), the Laforgia root bound for the
// coupled family C_d^{1 + theta d}.
double gamma_theta(double theta);
Rational gamma_theta_sq(const Rational& theta);

struct ThetaRatio {
    double theta = 0.0;
    double gamma = 1.0;
};

ThetaRatio theta_ratio(double theta);

double geg_maxroot(int d, const Rational& alpha, const RootIsolationConfig& cfg = {});
RootInterval geg_maxroot_interval(int d, const Rational& alpha, const Rational& width);

// Gamma^d_theta = max(maxroot C_d^{1+theta d}, maxroot C_{d+1}^{1+theta(d+1)}).
struct TwoStepMaxroot {
    int d = 1;
    double theta = 0.0;
    double value = 0.0;
};

TwoStepMaxroot two_step_maxroot(int d, const Rational& theta,
                                const RootIsolationConfig& cfg = {});

// Limiting root density of the coupled family: ((1+theta)/pi) sqrt(gamma^2 - y^2)/(1 - y^2)
// on [-gamma, gamma], zero outside. theta = 0 is excluded (the support endpoint
// meets the 1 - y^2 pole only in that limit).
double asymptotic_density(double theta, double y);

// Cauchy transform of the limiting density, in the rationalized form
// (2 theta + 1)/(theta x + (1+theta) sqrt(x^2 - gamma^2)), which is regular at
// x = 1 and equals (-theta x + (1+theta) sqrt(x^2 - gamma^2))/(x^2 - 1).
double asymptotic_cauchy(double theta, double x);

// Nonasymptotic bound (2n+d)/(n x + sqrt((n+d)^2 (x^2-1) + n^2)) on the Cauchy
// transform of C_d^{n+1}, valid for x > gamma_{n/d}.
double cauchy_upper_bound(int n, int d, double x);

// Exact certificate that cauchy_transform(C_d^{n+1}, x) <= the bound above,
// decided in rational arithmetic (the one square root is compared by squaring).
bool cauchy_bound_certificate(int n, int d, const Rational& x);

// f(x, y) = d (x^2 - 1) y^2 + 2 n x y - (2n + d). ans_check decides the
// implication "f(s, t) >= 0 implies cauchy_transform(C_d^{n+1}, s) <= t"
// exactly on the rationalized inputs.
double ans_f(double x, double y, int n, int d);
bool ans_check(double s, double t, int n, int d);

// Normalized coupled family p_{j,k} = C_j^{1+theta k} / C_j^{1+theta k}(1) and
// its recurrence weight lambda_{j,k} = (j + 2k theta + 2)/(2j + 2k theta + 2).
double normalized_geg(int j, int k, double theta, double x);
ExactPolynomial normalized_geg_poly(int j, int k, const Rational& theta);
Rational lambda_jk(int j, int k, const Rational& theta);

// Delta_{j,d} = p_{j+1,d+1} p_{j-1,d} - p_{j,d} p_{j,d+1}, for 1 <= j <= d.
FloatPolynomial delta_poly(int j, int d, double theta);
ExactPolynomial delta_poly_exact(int j, int d, const Rational& theta);

// Fitness for beta: negative everywhere on (beta, 1), positive on (1, x_max].
struct FitnessConfig {
    int grid_points = 2048;
    double x_max = 10.0;
};

struct FitnessReport {
    bool grid_pass = false;  // strict signs on both sampled grids
    bool certified = false;  // Sturm counts rule out any interior sign change
    bool fit() const { return grid_pass; }
};

// Grid-only check; beta itself is excluded from the sampled interval.
bool fitness_check(const FloatPolynomial& p, double beta, const FitnessConfig& cfg = {});
// Grid check plus exact Sturm confirmation on (beta, 1) and (1, x_max].
FitnessReport fitness_check_certified(const ExactPolynomial& p, const Rational& beta,
                                      const FitnessConfig& cfg = {});

// Integral of the limiting density against 1/(x - z), by adaptive Simpson after
// the substitution z = gamma sin u (which absorbs the endpoint square roots).
double quadrature_cauchy(double theta, double x, double tol);

// Cauchy transform of C_d^alpha through the ratio recurrence
// rho_{j+1} = (2(j+alpha) x - (j+2alpha-1)/rho_j)/(j+1), rho_1 = 2 alpha x,
// then C'/(d C) = (d x - (d+2alpha-1)/rho_d)/(d (x^2 - 1)). Works at degrees
// where the coefficients themselves overflow doubles; needs x above the
// largest root and x != +-1.
double geg_cauchy_ratio(int d, double alpha, double x);

}  // namespace ffr
