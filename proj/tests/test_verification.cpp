#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "ffr/verification.hpp"

using namespace ffr;

TEST_CASE("default specs carry claim-appropriate sizes") {
    CHECK(default_trial_spec("main").trials == 500);
    CHECK(default_trial_spec("rr").trials == 1000);
    CHECK(default_trial_spec("rr").d_max == 10);
    CHECK(default_trial_spec("claimt").trials == 1000);
    CHECK(default_trial_spec("pinch").trials == 300);
    CHECK(default_trial_spec("basictheta").trials == 200);
    CHECK(default_trial_spec("deriv").trials == 1);
    CHECK_THROWS_AS(default_trial_spec("unheard-of"), std::invalid_argument);
    CHECK_THROWS_AS(run_claim("unheard-of", TrialSpec{}), std::invalid_argument);
}

TEST_CASE("reports are deterministic in the seed") {
    TrialSpec spec = default_trial_spec("basictheta");
    spec.seed = 42;
    spec.trials = 25;
    const VerificationReport a = run_claim("basictheta", spec);
    const VerificationReport b = run_claim("basictheta", spec);
    CHECK(a.trials == b.trials);
    CHECK(a.passes == b.passes);
    CHECK(a.failures == b.failures);
    CHECK(a.near_equalities == b.near_equalities);
    CHECK(a.min_margin == b.min_margin);
    CHECK(a.worst_case == b.worst_case);

    spec.seed = 43;
    const VerificationReport c = run_claim("basictheta", spec);
    CHECK(c.worst_case != a.worst_case);
}

TEST_CASE("thread cap does not change the aggregate") {
    TrialSpec spec = default_trial_spec("translate");
    spec.seed = 7;
    spec.trials = 12;
    const VerificationReport wide = run_claim("translate", spec);
    setenv("FFR_THREADS", "1", 1);
    const VerificationReport narrow = run_claim("translate", spec);
    unsetenv("FFR_THREADS");
    CHECK(wide.min_margin == narrow.min_margin);
    CHECK(wide.worst_case == narrow.worst_case);
    CHECK(wide.passes == narrow.passes);
}

TEST_CASE("spec validation") {
    TrialSpec spec;
    spec.trials = 0;
    CHECK_THROWS_AS(verify_main(spec), std::invalid_argument);
    spec = TrialSpec{};
    spec.alpha_lo = 2.0;
    spec.alpha_hi = 1.0;
    CHECK_THROWS_AS(verify_main(spec), std::invalid_argument);
    spec = TrialSpec{};
    spec.root_max = Rational(0);
    CHECK_THROWS_AS(verify_main(spec), std::invalid_argument);
    spec = TrialSpec{};
    spec.margin = -1.0;
    CHECK_THROWS_AS(verify_main(spec), std::invalid_argument);
}

TEST_CASE("small randomized batteries pass") {
    TrialSpec spec;
    spec.seed = 11;
    spec.trials = 25;
    for (const char* claim : {"main", "rr", "quasilinear", "basictheta", "translate",
                              "hmonotone", "monotu", "simplify", "claimt"}) {
        const VerificationReport rep = run_claim(claim, spec);
        INFO(claim, ": ", rep.worst_case);
        CHECK(rep.ok());
        CHECK(rep.trials == 25);
        CHECK(rep.passes == 25);
    }
}

TEST_CASE("single base cases") {
    CHECK(deriv_case_check(Rational(1), 1, 3).ok());
    CHECK(deriv_case_check(Rational(1, 4), 0, 2).ok());
    CHECK(claimT_check(Rational(2), Rational(3), 1, 4).ok());
    CHECK(geg0_check(Rational(1, 2), Rational(2), 1, 3, 1.0).ok());
    CHECK(geg0_check(Rational(1), Rational(1), 0, 2, 0.5).ok());
    CHECK(allderiv_degree2_check(Rational(2), Rational(1), 1.0, 1).ok());
    CHECK(allderiv_degree2_check(Rational(2), Rational(0), 2.0, 0).ok());
}

TEST_CASE("the worst trial is always echoed for replay") {
    TrialSpec spec;
    spec.seed = 3;
    spec.trials = 10;
    spec.margin = 0.0;
    const VerificationReport rep = verify_main(spec);
    CHECK(rep.trials == 10);
    CHECK(rep.passes + rep.failures == 10);
    CHECK(!rep.worst_case.empty());
    CHECK(rep.claim == "main");
    CHECK(rep.runtime_ms > 0.0);
}
