#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ffr/convolution.hpp"
#include "ffr/polynomial.hpp"
#include "ffr/transforms.hpp"

using namespace ffr;

TEST_CASE("S and V transforms") {
    const ExactPolynomial p = from_roots({Rational(1), Rational(4)}, Rational(2));
    CHECK(s_transform(p) == substitute_square(p));
    CHECK(v_transform(p, 3) == shift_up(p, 3));
    CHECK(v_transform(p, 0) == p);
}

TEST_CASE("h_eval agrees across exact and float paths") {
    const ExactPolynomial p = from_roots({Rational(1), Rational(4)}, Rational(2));
    const int n = 2;
    const Rational x(3);
    // w = 2x p'(x^2)/p(x^2) at x = 3: p(9) = 2*8*5 = 80, p'(9) = 2*(8+5) = 26.
    // w = 6*26/80 = 39/20; h = w(2n/x + w).
    const Rational w(39, 20);
    const Rational expected = w * (Rational(4, 3) + w);
    CHECK(h_eval(p, n, x) == expected);
    CHECK(h_eval(p, n, 3.0) == doctest::Approx(to_double(expected)).epsilon(1e-14));
    CHECK(h_eval(to_float(p), n, 3.0) ==
          doctest::Approx(to_double(expected)).epsilon(1e-14));
    CHECK_THROWS_AS(h_eval(p, n, Rational(2)), std::domain_error);
    CHECK_THROWS_AS(h_eval(p, 1, Rational(-3)), std::domain_error);
}

TEST_CASE("W factors through the reduced half-degree polynomial") {
    const ExactPolynomial p =
        from_roots({Rational(1, 2), Rational(3), Rational(7, 4)}, Rational(5, 3));
    const int n = 2;
    const WTransformResult res = w_polynomial(p, n, Rational(3, 2));
    CHECK(res.w_poly == shift_up(substitute_square(res.reduced), 2 * n));
    CHECK(res.reduced == reduced_w(p, n, Rational(9, 4)));

    // R(y) = p^2 - 4 n alpha^2 p p' - 4 y alpha^2 p'^2, assembled independently.
    const Rational a2(9, 4);
    const ExactPolynomial dp = derivative(p);
    const ExactPolynomial direct =
        p * p - (Rational(4 * n) * a2) * (p * dp) - (Rational(4) * a2) * shift_up(dp * dp, 1);
    CHECK(res.reduced == direct);
}

TEST_CASE("W maxroot enclosure squares the reported root") {
    const ExactPolynomial p = from_roots({Rational(1), Rational(4)}, Rational(1));
    const int n = 1;
    const Rational width = Rational(Integer(1), Integer(1) << 50);
    const RootInterval iv = w_maxroot_sq_interval(p, n, Rational(1), width);
    const double w = maxroot_w(p, n, 1.0);
    CHECK(w * w == doctest::Approx(to_double(iv.midpoint())).epsilon(1e-12));
    // The H level set at the maxroot sits at 1/alpha^2.
    CHECK(h_eval(p, n, w) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("theta closed form on basic inputs") {
    // Theta of (x - lambda)^j with gap n: sqrt((n+j)^2 alpha^2 + lambda) + alpha j.
    const int n = 1;
    const int j = 3;
    const Rational lambda(5);
    const double alpha = 0.75;
    const ExactPolynomial p = from_roots({lambda, lambda, lambda}, Rational(1));
    const ThetaReport rep = theta(p, n, rational_from_double(alpha));
    const double expected =
        std::sqrt((n + j) * (n + j) * alpha * alpha + to_double(lambda)) + alpha * j;
    CHECK(rep.theta == doctest::Approx(expected).epsilon(1e-10));
    CHECK(rep.d == j);
    CHECK(rep.n == n);

    // The pure power x^d hits the same closed form at lambda = 0.
    const ThetaReport zero = theta(ExactPolynomial::monomial(4), 2, Rational(1, 2));
    CHECK(zero.theta == doctest::Approx(0.5 * (2 + 2 * 4)).epsilon(1e-10));
}

TEST_CASE("theta spec instance") {
    const ThetaReport rep = theta(from_roots({Rational(3)}, Rational(1)), 0, Rational(1));
    CHECK(rep.theta == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("phi vanishes on pure powers and rescales with alpha") {
    const int d = 3;
    const int n = 2;
    const ExactPolynomial pure = ExactPolynomial::monomial(d);
    CHECK(std::abs(phi(pure, pure, n, n, d, Rational(1))) <= 1e-10);

    const ExactPolynomial p = from_roots({Rational(1), Rational(2), Rational(4)},
                                         Rational(1));
    const ExactPolynomial q = from_roots({Rational(1, 2), Rational(3), Rational(3)},
                                         Rational(1));
    const double alpha = 1.5;
    const double direct = phi(p, q, n, n, d, rational_from_double(alpha));
    CHECK(direct > 0);
    CHECK(phi(p, q, n, n, d, rational_from_double(alpha)) ==
          phi(q, p, n, n, d, rational_from_double(alpha)));

    // phi_alpha(p, q) = alpha * phi_1(p(alpha^2 x), q(alpha^2 x)).
    const Rational a2 = rational_from_double(alpha) * rational_from_double(alpha);
    auto rescale = [&](const ExactPolynomial& f) {
        ExactPolynomial out = f;
        Rational power(1);
        for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
            out.coeffs[i] *= power;
            power *= a2;
        }
        out.normalize();
        return out;
    };
    const double scaled = alpha * phi(rescale(p), rescale(q), n, n, d, Rational(1));
    CHECK(direct == doctest::Approx(scaled).epsilon(1e-9));
}
