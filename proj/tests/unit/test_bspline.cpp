#include "uncert/bspline.hpp"
#include "uncert/reference.hpp"

#include <doctest.h>

using namespace uncert;

TEST_SUITE("bspline") {

TEST_CASE("rect^3 middle piece") {
    const PiecewisePoly b = rect_p_explicit(3);
    CHECK(b.lo() == Rational(-3, 2));
    CHECK(b.hi() == Rational(3, 2));
    REQUIRE(b.size() == 3);
    CHECK(b.pieces()[1] == (Polynomial{Rational(3, 4), Rational(0), Rational(-1)}));
    CHECK(rect_p_explicit(1) == unit_rect());
    CHECK(rect_p_explicit(2) == tent());
}

TEST_CASE("explicit and recursive constructions agree") {
    for (int p = 1; p <= 12; ++p) CHECK(rect_p_explicit(p) == rect_p_recursive(p));
    CHECK_THROWS_AS((void)rect_p_explicit(0), std::invalid_argument);
}

TEST_CASE("mass one and zero mean") {
    for (int p = 1; p <= 10; ++p) {
        const PiecewisePoly b = rect_p_explicit(p);
        CHECK(moment(b, 0, Power::linear) == Rational(1));
        CHECK(moment(b, 1, Power::linear) == Rational(0));
    }
}

TEST_CASE("norms and uncertainty of low orders") {
    // frozen from the symbolic oracle
    const PiecewisePoly b3 = rect_p_explicit(3);
    CHECK(norm_sq(b3) == Rational(11, 20));
    CHECK(moment(derivative(b3), 0, Power::squared) == Rational(1));
    CHECK(norm_sq(rect_p_explicit(4)) == Rational(151, 315));
    CHECK(norm_sq(rect_p_explicit(5)) == Rational(15619, 36288));
    const auto rows = rect_scan(3, 5);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].u_p == Rational(43, 308));
    CHECK(rows[0].nu_p == ExtReal(Rational(20, 11)));
    CHECK(rows[0].uncertainty == ExtReal(Rational(215, 847)));
    CHECK(rows[1].uncertainty == ExtReal(Rational(17185, 68403)));
    CHECK(rows[2].uncertainty == ExtReal(Rational(672767550, 2683484771L)));
    CHECK(rows[2].uncertainty_float == doctest::Approx(0.2507066771052676).epsilon(1e-14));
    CHECK_THROWS_AS((void)rect_scan(1, 3), std::invalid_argument);
    CHECK(!uncertainty(rect_p_explicit(1)).is_finite());
}

TEST_CASE("window integral of the tent") {
    const PiecewisePoly w = window_integral(tent(), Rational(1, 2));
    CHECK(moment(w, 0, Power::linear) == Rational(1));
    CHECK(w.lo() == Rational(-3, 2));
}

TEST_CASE("scan tends to 1/4 from above") {
    const ClaimReport r = limit_check(24);
    CHECK_MESSAGE(r.ok(), r.failures());
    for (const auto& row : rect_scan(2, 24)) CHECK(row.uncertainty.value() > Rational(1, 4));
}

}  // TEST_SUITE
