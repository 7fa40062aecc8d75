#include <doctest.h>

#include "ffr/convolution.hpp"
#include "ffr/polynomial.hpp"
#include "ffr/rational.hpp"

using namespace ffr;

TEST_CASE("monomial convolution vanishes below the diagonal") {
    CHECK(monomial_convolve(0, 0, {1, 0}).is_zero());
    CHECK(monomial_convolve(2, 1, {4, 3}).is_zero());
}

TEST_CASE("x^d is the identity element") {
    const ConvolutionParams params{3, 2};
    const ExactPolynomial id = ExactPolynomial::monomial(3);
    const ExactPolynomial p = from_roots({Rational(1), Rational(5, 2), Rational(4)},
                                         Rational(7, 3));
    CHECK(rect_convolve(p, id, params) == p);
    CHECK(rect_convolve(id, p, params) == p);
}

TEST_CASE("degree one closed form") {
    // (x - 1) into (x - 2) at (d, k) = (1, 0) is x - 3.
    const ExactPolynomial p = from_roots({Rational(1)}, Rational(1));
    const ExactPolynomial q = from_roots({Rational(2)}, Rational(1));
    CHECK(rect_convolve(p, q, {1, 0}) == from_roots({Rational(3)}, Rational(1)));
}

TEST_CASE("bilinearity and symmetry") {
    const ConvolutionParams params{2, 1};
    const ExactPolynomial p = from_roots({Rational(1), Rational(2)}, Rational(1));
    const ExactPolynomial q = from_roots({Rational(3), Rational(1, 2)}, Rational(2));
    const ExactPolynomial r = from_roots({Rational(0), Rational(4)}, Rational(1, 3));
    CHECK(rect_convolve(p, q, params) == rect_convolve(q, p, params));
    CHECK(rect_convolve(p + r, q, params) ==
          rect_convolve(p, q, params) + rect_convolve(r, q, params));
}

TEST_CASE("differential closed form for the x^{d-1} factor") {
    const ConvolutionParams params{4, 2};
    const ExactPolynomial p = from_roots(
        {Rational(1), Rational(2), Rational(3), Rational(5)}, Rational(3, 2));
    const ExactPolynomial direct =
        rect_convolve(p, ExactPolynomial::monomial(3), params);
    CHECK(convolve_with_xdm1(p, params) == direct);
    // (x p'' + (k+1) p') / ((d+k) d)
    const ExactPolynomial by_hand =
        Rational(1, 24) *
        (shift_up(derivative(derivative(p)), 1) + Rational(3) * derivative(p));
    CHECK(direct == by_hand);
}

TEST_CASE("repeated-root convolution with x^{d-1} pinches one root") {
    // [(x-lambda)^d (+) x^{d-1}] = (x-lambda)^{d-2} (x - c), c = (n+1) lambda / m.
    const int d = 4;
    const int n = 2;
    const Rational lambda(3);
    const Rational c = Rational(n + 1) * lambda / Rational(n + d);
    const ExactPolynomial p =
        from_roots({lambda, lambda, lambda, lambda}, Rational(1));
    const ExactPolynomial image =
        rect_convolve(p, ExactPolynomial::monomial(d - 1), {d, n});
    CHECK(image == from_roots({lambda, lambda, c}, Rational(1)));
}

TEST_CASE("Gegenbauer closed form matches the bilinear expansion") {
    const int d = 3;
    const int n = 2;
    for (const auto& [lam, mu] : {std::pair{Rational(1), Rational(4)},
                                  std::pair{Rational(2), Rational(2)},
                                  std::pair{Rational(9, 4), Rational(1)}}) {
        const ExactPolynomial p = from_roots({lam, lam, lam}, Rational(1));
        const ExactPolynomial q = from_roots({mu, mu, mu}, Rational(1));
        const ExactPolynomial direct = rect_convolve(p, q, {d, n});
        CHECK(basic_convolution_gegenbauer_exact(lam, mu, d, n) == direct);
        const FloatPolynomial rounded = basic_convolution_gegenbauer(lam, mu, d, n);
        REQUIRE(rounded.degree() == direct.degree());
        for (int i = 0; i <= direct.degree(); ++i)
            CHECK(rounded.coeffs[i] ==
                  doctest::Approx(to_double(direct.coeff(i))).epsilon(1e-12));
    }
}

TEST_CASE("generating function coefficient") {
    for (const auto& [k, d] : {std::pair{0, 2}, std::pair{1, 3}, std::pair{3, 4}}) {
        const Rational lam(5, 2), mu(3);
        const ExactPolynomial p = from_roots(std::vector<Rational>(d, lam), Rational(1));
        const ExactPolynomial q = from_roots(std::vector<Rational>(d, mu), Rational(1));
        const ExactPolynomial conv = rect_convolve(p, q, {d, k});
        CHECK(gf_coefficient(lam, mu, k, d) ==
              binomial(static_cast<unsigned long>(k + d),
                       static_cast<unsigned long>(d)) *
                  conv);
    }
}

TEST_CASE("degree drops by the convolution defect") {
    const ConvolutionParams params{4, 1};
    const ExactPolynomial p =
        from_roots({Rational(1), Rational(2)}, Rational(1));  // degree 2 in d = 4
    const ExactPolynomial q =
        from_roots({Rational(1), Rational(1), Rational(3)}, Rational(1));  // degree 3
    CHECK(rect_convolve(p, q, params).degree() == 1);
    const ExactPolynomial tiny = from_roots({Rational(1)}, Rational(1));
    CHECK(rect_convolve(p, tiny, params).is_zero());
}
