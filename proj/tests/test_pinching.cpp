#include <doctest.h>

#include <stdexcept>

#include "ffr/pinching.hpp"
#include "ffr/polynomial.hpp"
#include "ffr/transforms.hpp"

using namespace ffr;

TEST_CASE("pinch_at_point hand instance") {
    const PinchPoint pp = pinch_at_point(Rational(0), Rational(2), Rational(4));
    CHECK(pp.mu == Rational(4, 3));
    CHECK(pp.kappa == Rational(2, 3));
    CHECK(pp.rho == Rational(8, 3));
}

TEST_CASE("pinch_at_point satisfies the quadratic identity for any pivot") {
    for (const auto& [a, b, t] :
         {std::tuple{Rational(0), Rational(2), Rational(4)},
          std::tuple{Rational(1, 2), Rational(3), Rational(7, 2)},
          std::tuple{Rational(1), Rational(5, 4), Rational(100)}}) {
        const PinchPoint pp = pinch_at_point(a, b, t);
        CHECK(a < pp.mu);
        CHECK(pp.mu < b);
        CHECK(b < pp.rho);
        CHECK(pp.rho < t);
        CHECK(pp.kappa > 0);
        // (x - mu)^2 + kappa (x - rho) = (x - a)(x - b)
        const ExactPolynomial lhs =
            from_roots({pp.mu, pp.mu}, Rational(1)) +
            pp.kappa * from_roots({pp.rho}, Rational(1));
        CHECK(lhs == from_roots({a, b}, Rational(1)));
    }
}

TEST_CASE("pinch_at_point rejects bad orderings") {
    CHECK_THROWS_AS(pinch_at_point(Rational(2), Rational(2), Rational(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(pinch_at_point(Rational(-1), Rational(2), Rational(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(pinch_at_point(Rational(1), Rational(4), Rational(4)),
                    std::invalid_argument);
}

TEST_CASE("linear W and linear H agree at the linear maxroot") {
    const ExactPolynomial p = from_roots({Rational(1), Rational(3)}, Rational(2));
    const int n = 1;
    const Rational zeta(1, 2);
    CHECK(linear_w(p, n, zeta) == linear_w_sq(p, n, zeta * zeta));
    const double t = linear_maxroot(p, n, zeta);
    CHECK(linear_h(p, n, t) == doctest::Approx(4.0).epsilon(1e-8));
    // linear_h(x) = L (n/x + L), L = p'/p.
    const Rational x(5);
    const Rational L = log_slope(p, x);
    CHECK(linear_h(p, n, x) == L * (Rational(n) / x + L));
}

TEST_CASE("linear pinch decomposes exactly") {
    const ExactPolynomial p =
        from_roots({Rational(1, 2), Rational(2), Rational(3)}, Rational(5, 4));
    const int n = 2;
    const PinchDecomposition dec = linear_pinch(p, n, Rational(3, 4));
    CHECK(dec.roots_exact);
    CHECK(dec.a == Rational(2));
    CHECK(dec.b == Rational(3));
    CHECK(dec.p_tilde + dec.p_hat == p);
    CHECK(dec.a < dec.mu);
    CHECK(dec.mu < dec.b);
    CHECK(dec.b < dec.rho);
    CHECK(dec.rho < dec.t);
    // Both parts keep the slope of p at the pivot.
    CHECK(log_slope(p, dec.t) == log_slope(dec.p_tilde, dec.t));
    CHECK(log_slope(p, dec.t) == log_slope(dec.p_hat, dec.t));
}

TEST_CASE("quad pinch pivots at the W maxroot") {
    const ExactPolynomial p =
        from_roots({Rational(1), Rational(2), Rational(4)}, Rational(1));
    const int n = 1;
    const double alpha = 1.25;
    const PinchDecomposition dec = quad_pinch(p, n, alpha);
    CHECK(dec.roots_exact);
    CHECK(dec.p_tilde + dec.p_hat == p);
    const double t0 = maxroot_w(p, n, alpha);
    CHECK(to_double(dec.t) == doctest::Approx(t0 * t0).epsilon(1e-8));
    // The pinched parts keep the W maxroot itself.
    CHECK(maxroot_w(dec.p_tilde, n, alpha) == doctest::Approx(t0).epsilon(1e-9));
    CHECK(maxroot_w(dec.p_hat, n, alpha) == doctest::Approx(t0).epsilon(1e-9));
}

TEST_CASE("pinch rejects degenerate inputs") {
    CHECK_THROWS_AS(quad_pinch(from_roots({Rational(2)}, Rational(1)), 1, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        quad_pinch(from_roots({Rational(2), Rational(2)}, Rational(1)), 1, 1.0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        quad_pinch(from_roots({Rational(-1), Rational(2)}, Rational(1)), 1, 1.0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        quad_pinch(from_roots({Rational(1), Rational(2)}, Rational(1)), 1, -1.0),
        std::invalid_argument);
}
