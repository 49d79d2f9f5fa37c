#include "generators.hpp"
#include "uncert/bspline.hpp"
#include "uncert/piecewise.hpp"
#include "uncert/reference.hpp"

#include <doctest.h>

using namespace uncert;

TEST_SUITE("pwpoly") {

TEST_CASE("construction validates and canonicalises") {
    CHECK_THROWS_AS(PiecewisePoly({Rational(0), Rational(0)}, {Polynomial{Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewisePoly({Rational(0), Rational(1)}, {}), std::invalid_argument);
    // identical neighbours merge, zero edge pieces are trimmed
    const PiecewisePoly f({Rational(-2), Rational(-1), Rational(0), Rational(1)},
                          {Polynomial{}, Polynomial{Rational(1)}, Polynomial{Rational(1)}});
    CHECK(f.size() == 1);
    CHECK(f.lo() == Rational(-1));
    CHECK(f.hi() == Rational(1));
    CHECK(PiecewisePoly({Rational(0), Rational(1)}, {Polynomial{}}).is_zero());
}

TEST_CASE("evaluation is right-continuous with a closed last interval") {
    const PiecewisePoly step({Rational(0), Rational(1), Rational(2)},
                             {Polynomial{Rational(1)}, Polynomial{Rational(3)}});
    CHECK(evaluate(step, Rational(0)) == Rational(1));
    CHECK(evaluate(step, Rational(1)) == Rational(3));
    CHECK(evaluate(step, Rational(2)) == Rational(3));
    CHECK(evaluate(step, Rational(5, 2)) == Rational(0));
    CHECK(evaluate(step, Rational(-1)) == Rational(0));
    CHECK(evaluate(tent(), 0.5) == doctest::Approx(0.5));
}

TEST_CASE("tent norms") {
    CHECK(moment(tent(), 0, Power::squared) == Rational(2, 3));
    CHECK(moment(tent(), 2, Power::squared) == Rational(1, 15));
    CHECK(moment(tent(), 0, Power::linear) == Rational(1));
    CHECK(moment(tent(), 1, Power::linear) == Rational(0));
}

TEST_CASE("affine maps and reflections") {
    auto g = testgen::rng(10);
    for (int i = 0; i < 60; ++i) {
        const PiecewisePoly f = testgen::piecewise(g);
        const Rational lam = testgen::nonzero_rational(g);
        const Rational gam = testgen::nonzero_rational(g);
        const Rational tau = testgen::rational(g);
        const PiecewisePoly h = affine(f, lam, gam, tau);
        for (int k = 0; k < 4; ++k) {
            const Rational x = testgen::rational(g, 12, 5);
            // Pointwise except at the images of breakpoints, where the side flips for gam < 0.
            bool at_break = false;
            for (const auto& b : f.breakpoints()) at_break = at_break || (gam * x - tau == b);
            if (!at_break) CHECK(evaluate(h, x) == lam * evaluate(f, gam * x - tau));
        }
        const Rational c = testgen::rational(g);
        CHECK(reflect(reflect(f, c), c) == f);
        CHECK(affine(affine(f, Rational(1), gam, Rational(0)), Rational(1), Rational(1) / gam, Rational(0)) == f);
    }
    CHECK_THROWS_AS((void)affine(tent(), Rational(1), Rational(0), Rational(0)), std::invalid_argument);
    CHECK(reflect(tent(), Rational(0)) == tent());
}

TEST_CASE("restriction, sums and products") {
    const PiecewisePoly t = tent();
    const PiecewisePoly left = restrict(t, Rational(-5), Rational(0));
    const PiecewisePoly right = restrict(t, Rational(0), Rational(5));
    CHECK(left + right == t);
    CHECK(left.hi() == Rational(0));
    CHECK(t - t == PiecewisePoly());
    CHECK(moment(t * t, 0, Power::linear) == Rational(2, 3));
    CHECK(Rational(2) * t == t + t);
    CHECK(restrict(t, Rational(3), Rational(4)).is_zero());
}

TEST_CASE("derivative refuses interior jumps") {
    const PiecewisePoly step({Rational(0), Rational(1), Rational(2)},
                             {Polynomial{Rational(1)}, Polynomial{Rational(3)}});
    CHECK_THROWS_AS((void)derivative(step), std::domain_error);
    CHECK(interior_jump(step, 1) == Rational(2));
    const PiecewisePoly dt = derivative(tent());
    CHECK(evaluate(dt, Rational(-1, 2)) == Rational(1));
    CHECK(evaluate(dt, Rational(1, 2)) == Rational(-1));
}

TEST_CASE("classification") {
    CHECK(classify(tent()).cls == FunctionClass::p_plus_zero);
    CHECK(classify(unit_rect()).cls == FunctionClass::f_plus_supp);
    const PiecewisePoly step({Rational(0), Rational(1), Rational(2)},
                             {Polynomial{Rational(1)}, Polynomial{Rational(3)}});
    CHECK(classify(step).cls == FunctionClass::none);
    CHECK(classify(step).interior_jumps.size() == 1);

    const PiecewisePoly cubic = reference_cubic();
    // f(1) = -1e-10 exactly: negative without a tolerance, F+_0 with one.
    CHECK(classify(cubic).cls == FunctionClass::f_supp);
    CHECK(classify(cubic, kReferenceCubicTol).cls == FunctionClass::f_plus_zero);
    CHECK(classify(rect_p_explicit(4)).cls == FunctionClass::p_plus_zero);
    CHECK(to_string(FunctionClass::f_plus_zero) == "F_plus_zero");
}

TEST_CASE("nonnegativity: proven, refuted, or merely probed") {
    CHECK(check_nonnegative(tent()) == Nonnegativity::proven);
    const PiecewisePoly neg({Rational(-1), Rational(1)}, {Polynomial{Rational(0), Rational(1)}});
    CHECK(check_nonnegative(neg) == Nonnegativity::negative);
    // (x - 1/3)^2 on [0, 1]: nonnegative with an interior zero the Bernstein
    // test cannot certify at degree 2, and no probe goes negative.
    const PiecewisePoly sq({Rational(0), Rational(1)},
                           {Polynomial{Rational(1, 9), Rational(-2, 3), Rational(1)}});
    CHECK(check_nonnegative(sq) != Nonnegativity::negative);
}

TEST_CASE("evenness") {
    CHECK(is_even_about(tent(), Rational(0)));
    CHECK(!is_even_about(reference_cubic(), Rational(0), kReferenceCubicTol));
    const PiecewisePoly shifted = affine(tent(), Rational(1), Rational(1), Rational(3));
    CHECK(is_even_about(shifted, Rational(3)));
}

}  // TEST_SUITE
