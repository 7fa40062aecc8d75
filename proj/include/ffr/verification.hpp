// Randomized and grid-based certification of the inequalities and identities
// implemented by the other modules. Every report is a pure value and is
// deterministic given (seed, spec); trials may run concurrently (capped by the
// FFR_THREADS environment variable) because each trial derives its own RNG
// stream from (seed, trial index) and results are aggregated in index order.
#pragma once

#include <cstdint>
#include <string>

#include "ffr/rational.hpp"

namespace ffr {

struct TrialSpec {
    std::uint64_t seed = 0;
    int trials = 1;
    int d_max = 8;
    int n_max = 5;
    // alpha is drawn from (alpha_lo, alpha_hi].
    double alpha_lo = 0.0;
    double alpha_hi = 2.0;
    // Roots are drawn from the dyadic lattice {k/64} inside (0, root_max];
    // leading coefficients from the same lattice inside (0, 4].
    Rational root_max = Rational(8);
    // Strict inequalities accept values down to -margin.
    double margin = 1e-9;
};

// Values that clear -margin but stay below this are counted separately as
// near-equalities for human review.
inline constexpr double kNearEqualityTol = 1e-7;

struct VerificationReport {
    std::string claim;
    int trials = 0;
    int passes = 0;
    int failures = 0;
    int near_equalities = 0;
    // Smallest slack seen across all checks that produce one; 0 when every
    // check was an exact yes/no decision.
    double min_margin = 0.0;
    // Inputs of the worst trial, precise enough to replay it by hand.
    std::string worst_case;
    // Wall clock; deliberately not part of the serialized report.
    double runtime_ms = 0.0;

    bool ok() const { return failures == 0; }
};

// Claim-appropriate defaults (trial counts, degree caps) for a CLI claim name.
TrialSpec default_trial_spec(const std::string& claim);

// phi(p, q, n, n, d, alpha) >= -margin over random closure-class inputs, with
// the equality diagnosis (a monomial input) demanded whenever phi nearly
// vanishes.
VerificationReport verify_main(const TrialSpec& spec);

// The convolution of closure-class inputs of degrees i, j lands in the closure
// of class i + j - d, certified by exact Sturm counting.
VerificationReport verify_rr(const TrialSpec& spec);

// H min/max straddle for r = p + q at points above sqrt(maxroot(pqr)), the
// matching straddle of the W maxroots, and exact equality propagation.
VerificationReport quasilinear_check(const TrialSpec& spec);

// Base case at a single (lambda, n, d), all in exact arithmetic: the W maxroot
// of [(x-lambda)^d (+) x^{d-1}] stays below mu_lambda, the quartic cofactor
// s_lambda is extracted by exact division and is positive at mu_lambda, and
// the finite-difference second derivative at 0 matches the closed form
// 32 (d-1)^2 (m-1)(n+1)(m+d-2) / m^3 with m = n + d.
VerificationReport deriv_case_check(const Rational& lambda, int n, int d);

// t = sqrt((n+d)^2+lambda) + sqrt((n+d)^2+mu), t* = sqrt(t^2 - 2tn),
// T = (t*^2 - lambda - mu)/(2 sqrt(lambda mu)), R = sqrt(lambda mu)/(d t);
// checks d(T^2-1)R^2 + 2nTR - (2n+d) = 0 and
// (dR(T^2-1) + nT)^2 = (n+d)^2 (T^2 - gamma_{n/d}^2) to 1e-12 relative.
VerificationReport claimT_check(const Rational& lambda, const Rational& mu, int n, int d);

// Full chain for the basic pair (x-lambda)^d, (x-mu)^d: normalized maxroot of
// the convolution below gamma_{n/d}, the surd inequality on sqrt(n^2 + w_r^2),
// phi > 0 at the given alpha, and the alpha-rescaling consistency
// phi_alpha(p, q) = alpha * phi_1(p(alpha^2 x), q(alpha^2 x)).
VerificationReport geg0_check(const Rational& lambda, const Rational& mu, int n, int d,
                              double alpha);

// Degree-2 spread family p_t = (x-a)^2 - t^2 with 0 <= t_param <= a: the W
// maxroot grows with the spread, [p_t (+) x] = x - a(n+1)/(n+2) independently
// of t_param, and the log-slope of p_t is exactly increasing in t above a + t.
VerificationReport allderiv_degree2_check(const Rational& a, const Rational& t_param,
                                          double alpha, int n);

// Grid aggregates behind the CLI claim names.
VerificationReport verify_deriv(const TrialSpec& spec);
VerificationReport verify_claimt(const TrialSpec& spec);
VerificationReport verify_geg0(const TrialSpec& spec);
VerificationReport verify_pinch(const TrialSpec& spec);
VerificationReport verify_gegenbauer(const TrialSpec& spec);

// Lemma-level randomized batteries used by the test suite.
VerificationReport verify_basictheta(const TrialSpec& spec);
VerificationReport verify_translate(const TrialSpec& spec);
VerificationReport verify_hmonotone(const TrialSpec& spec);
VerificationReport verify_monotu(const TrialSpec& spec);
VerificationReport verify_simplify(const TrialSpec& spec);

// Large-degree limit: exact Cauchy transforms of the coupled family increase
// monotonically toward the asymptotic transform, and the quadrature form of
// the limit matches its closed form.
VerificationReport verify_asymptotics();

// Dispatch by claim name ("main", "rr", "deriv", "claimt", "geg0",
// "quasilinear", "pinch", "gegenbauer", plus the lemma batteries above).
// Unknown names throw std::invalid_argument.
VerificationReport run_claim(const std::string& claim, const TrialSpec& spec);

}  // namespace ffr
