#include <doctest.h>

#include <stdexcept>

#include "ffr/polynomial.hpp"
#include "ffr/roots.hpp"

using namespace ffr;

namespace {
const Rational kWidth = Rational(Integer(1), Integer(1) << 40);
}

TEST_CASE("Sturm counts use half-open (lo, hi] semantics") {
    const ExactPolynomial p =
        from_roots({Rational(1), Rational(2), Rational(3)}, Rational(1));
    const SturmChain chain(p);
    CHECK(chain.count_all() == 3);
    CHECK(chain.count(Rational(1), Rational(2)) == 1);
    CHECK(chain.count(Rational(0), Rational(1)) == 1);
    CHECK(chain.count(Rational(2), Rational(3)) == 1);
    CHECK(chain.count(Rational(3), std::nullopt) == 0);
    CHECK(chain.count(std::nullopt, Rational(0)) == 0);
    CHECK(chain.count(std::nullopt, std::nullopt) == 3);
}

TEST_CASE("multiple roots count once") {
    const ExactPolynomial p =
        from_roots({Rational(2), Rational(2), Rational(5)}, Rational(7));
    CHECK(real_root_count(p) == 2);
    CHECK(real_root_count(p, Rational(1), Rational(2)) == 1);
}

TEST_CASE("no real roots") {
    const ExactPolynomial p(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(real_root_count(p) == 0);
    CHECK_THROWS_AS(max_real_root_interval(p, kWidth), std::domain_error);
}

TEST_CASE("cauchy_root_bound strictly contains the roots") {
    const ExactPolynomial p =
        from_roots({Rational(-3), Rational(1, 2), Rational(4)}, Rational(2));
    const Rational b = cauchy_root_bound(p);
    CHECK(b > 4);
    CHECK(real_root_count(p, -b, b) == 3);
}

TEST_CASE("dyadic roots are recovered exactly") {
    const ExactPolynomial p =
        from_roots({Rational(1, 64), Rational(3, 2), Rational(5)}, Rational(3, 4));
    const RootInterval top = max_real_root_interval(p, kWidth);
    CHECK(top.exact);
    CHECK(top.hi == Rational(5));
    CHECK(top.midpoint() == Rational(5));

    const RootInterval second = max_real_root_interval_below(p, Rational(5), kWidth);
    CHECK(second.exact);
    CHECK(second.hi == Rational(3, 2));

    const RootInterval again = max_real_root_interval_upto(p, second.hi, kWidth);
    CHECK(again.exact);
    CHECK(again.hi == Rational(3, 2));

    const RootInterval third = max_real_root_interval_below(p, second.hi, kWidth);
    CHECK(third.exact);
    CHECK(third.hi == Rational(1, 64));
}

TEST_CASE("irrational roots get width-certified brackets") {
    // x^2 - 2
    const ExactPolynomial p(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});
    const RootInterval iv = max_real_root_interval(p, kWidth);
    CHECK(!iv.exact);
    CHECK(iv.hi - iv.lo <= kWidth);
    CHECK(iv.lo * iv.lo < 2);
    CHECK(iv.hi * iv.hi > 2);
    CHECK(max_real_root(p) == doctest::Approx(1.4142135623730951).epsilon(1e-12));
}

TEST_CASE("below and upto cutoffs at a root") {
    const ExactPolynomial p =
        from_roots({Rational(1), Rational(2), Rational(3)}, Rational(1));
    // Strictly below 3 finds 2; at-or-below 3 finds 3 itself.
    CHECK(max_real_root_interval_below(p, Rational(3), kWidth).hi == Rational(2));
    CHECK(max_real_root_interval_upto(p, Rational(3), kWidth).hi == Rational(3));
    CHECK(max_real_root_interval_upto(p, Rational(5, 2), kWidth).hi == Rational(2));
    CHECK_THROWS_AS(max_real_root_interval_below(p, Rational(1), kWidth),
                    std::domain_error);
    CHECK_THROWS_AS(max_real_root_interval_upto(p, Rational(1, 2), kWidth),
                    std::domain_error);
}

TEST_CASE("isolate_real_roots returns ascending disjoint brackets") {
    const ExactPolynomial p = from_roots(
        {Rational(-2), Rational(1, 4), Rational(1, 4), Rational(7)}, Rational(1));
    const std::vector<RootInterval> roots = isolate_real_roots(p, kWidth);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].midpoint() == Rational(-2));
    CHECK(roots[1].midpoint() == Rational(1, 4));
    CHECK(roots[2].midpoint() == Rational(7));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi < roots[i + 1].lo);
}

TEST_CASE("nonneg-rooted classification") {
    const ExactPolynomial in_class =
        from_roots({Rational(0), Rational(2)}, Rational(3));
    CHECK(is_nonneg_rooted(in_class).nonneg_rooted);
    CHECK(is_nonneg_rooted(in_class).cls == NonnegClass::InClass);

    const ExactPolynomial closure = ExactPolynomial::monomial(3, Rational(2));
    CHECK(is_nonneg_rooted(closure).nonneg_rooted);
    CHECK(is_nonneg_rooted(closure).cls == NonnegClass::ClosureOnly);

    CHECK(is_nonneg_rooted(ExactPolynomial::constant(Rational(5))).cls ==
          NonnegClass::ClosureOnly);

    const ExactPolynomial negative_root =
        from_roots({Rational(-1), Rational(2)}, Rational(1));
    CHECK(!is_nonneg_rooted(negative_root).nonneg_rooted);
    CHECK(is_nonneg_rooted(negative_root).cls == NonnegClass::Neither);

    const ExactPolynomial complex_pair(
        std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(!is_nonneg_rooted(complex_pair).nonneg_rooted);

    const ExactPolynomial negative_lead =
        from_roots({Rational(1), Rational(2)}, Rational(-1));
    CHECK(is_nonneg_rooted(negative_lead).cls == NonnegClass::Neither);
}
