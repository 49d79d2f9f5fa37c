#include "generators.hpp"
#include "uncert/moments.hpp"
#include "uncert/reference.hpp"

#include <doctest.h>

#include <limits>

using namespace uncert;

TEST_SUITE("moments") {

TEST_CASE("tent: U = 3/10") {
    const MomentsReport m = moments(tent());
    CHECK(m.alpha == Rational(0));
    CHECK(m.norm_sq == Rational(2, 3));
    CHECK(m.sigma_x2 == Rational(1, 10));
    CHECK(m.sigma_w2 == ExtReal(Rational(3)));
    CHECK(m.uncertainty == ExtReal(Rational(3, 10)));
}

TEST_CASE("rect has infinite frequency variance") {
    const MomentsReport m = moments(unit_rect());
    CHECK(m.sigma_x2 == Rational(1, 12));
    CHECK(!m.sigma_w2.is_finite());
    CHECK(!m.uncertainty.is_finite());
    CHECK(m.sigma_w2.str() == "inf");
    CHECK(m.uncertainty.to_double() == std::numeric_limits<double>::infinity());
}

TEST_CASE("extended reals") {
    CHECK_THROWS_AS((void)(ExtReal(Rational(0)) * ExtReal::infinity()), std::domain_error);
    CHECK(!(ExtReal(Rational(2)) * ExtReal::infinity()).is_finite());
    CHECK((ExtReal(Rational(2)) * ExtReal(Rational(3, 4))) == ExtReal(Rational(3, 2)));
    CHECK_THROWS_AS((void)ExtReal::infinity().value(), std::logic_error);
}

TEST_CASE("zero function is rejected") {
    CHECK_THROWS_AS((void)moments(PiecewisePoly()), std::invalid_argument);
    CHECK_THROWS_AS((void)alpha(PiecewisePoly()), std::invalid_argument);
}

TEST_CASE("atom covariance: tent with t=2, xi=1, u=5") {
    const MomentsReport m = atom_moments(tent(), {Rational(2), Rational(1), Rational(5)});
    CHECK(m.alpha == Rational(5));
    CHECK(m.beta_coeff == Rational(1));
    CHECK(m.sigma_x2 == Rational(4, 10));
    CHECK(m.sigma_w2 == ExtReal(Rational(3, 4)));
    CHECK(m.uncertainty == ExtReal(Rational(3, 10)));
    CHECK(m.norm_sq == Rational(4, 3));
    CHECK_THROWS_AS((void)atom_moments(tent(), {Rational(0), Rational(0), Rational(0)}), std::invalid_argument);
}

TEST_CASE("atom covariance agrees with the moments of the scaled envelope") {
    auto g = testgen::rng(20);
    for (int i = 0; i < 30; ++i) {
        const PiecewisePoly env = testgen::piecewise(g);
        if (env.is_zero()) continue;
        const Rational t = abs(testgen::nonzero_rational(g));
        const Rational u = testgen::rational(g);
        const MomentsReport cov = atom_moments(env, {t, Rational(0), u});
        // env((x - u) / t) = affine(env, 1, 1/t, u/t)
        const MomentsReport direct = moments(affine(env, Rational(1), Rational(1) / t, u / t));
        CHECK(cov.alpha == direct.alpha);
        CHECK(cov.sigma_x2 == direct.sigma_x2);
        CHECK(cov.sigma_w2 == direct.sigma_w2);
        CHECK(cov.norm_sq == direct.norm_sq);
    }
}

TEST_CASE("U is invariant under scaling, translation and amplitude") {
    auto g = testgen::rng(21);
    for (int i = 0; i < 50; ++i) {
        const PiecewisePoly f = random_f_plus_zero(g);
        const PiecewisePoly h = affine(f, testgen::nonzero_rational(g), testgen::nonzero_rational(g),
                                       testgen::rational(g));
        CHECK(uncertainty(h) == uncertainty(f));
        CHECK(uncertainty(f).value() > Rational(1, 4));
    }
}

TEST_CASE("the reference cubic needs the boundary tolerance") {
    const PiecewisePoly f = reference_cubic();
    CHECK(!has_finite_frequency_variance(f));
    CHECK(has_finite_frequency_variance(f, kReferenceCubicTol));
    CHECK(!uncertainty(f).is_finite());
    // Frozen from the symbolic oracle.
    CHECK(alpha(f).to_double() == doctest::Approx(0.3842090381022477).epsilon(1e-14));
    CHECK(uncertainty(f, kReferenceCubicTol).to_double() == doctest::Approx(0.32820591003632227).epsilon(1e-14));
}

}  // TEST_SUITE
