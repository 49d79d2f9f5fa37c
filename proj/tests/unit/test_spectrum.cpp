#include "generators.hpp"
#include "uncert/bspline.hpp"
#include "uncert/dictionaries.hpp"
#include "uncert/moments.hpp"
#include "uncert/reference.hpp"
#include "uncert/spectrum.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace uncert;

namespace {

constexpr double pi = std::numbers::pi;

PiecewisePoly g_shape(int n) { return envelope({Family::G, n}).shape; }
PiecewisePoly f_shape(int n) { return envelope({Family::F, n}).shape; }

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("closed-form transforms of rect and tent") {
    for (double w : {-7.5, -1.0, 0.0, 0.3, 2.0, 13.0, 250.0}) {
        const double rect = w == 0.0 ? 1.0 : 2.0 * std::sin(w / 2) / w;
        const double tent_hat = w == 0.0 ? 1.0 : 2.0 * (1.0 - std::cos(w)) / (w * w);
        const SpectrumSample r = fourier_eval(unit_rect(), w);
        const SpectrumSample t = fourier_eval(tent(), w);
        CHECK(r.re == doctest::Approx(rect).epsilon(1e-12));
        CHECK(std::abs(r.im) < 1e-14);
        CHECK(t.re == doctest::Approx(tent_hat).epsilon(1e-12));
        CHECK(std::abs(t.im) < 1e-14);
    }
}

TEST_CASE("a shifted rect picks up a phase") {
    const PiecewisePoly r = PiecewisePoly::indicator(Rational(0), Rational(1));
    for (double w : {0.5, 3.0, 40.0}) {
        const auto v = FourierTransform(r)(w);
        const std::complex<double> expect = (1.0 - std::exp(std::complex<double>(0, -w))) / std::complex<double>(0, w);
        CHECK(std::abs(v - expect) < 1e-13);
    }
}

TEST_CASE("F_n and H_n at known points") {
    CHECK(F_n_eval(1, 0.0) == doctest::Approx(0.5));
    CHECK(F_n_eval(1, pi) == doctest::Approx(2.0 / (pi * pi)).epsilon(1e-14));
    CHECK(F_n_eval(3, 0.0) == doctest::Approx(0.25));
    CHECK(H_n_eval(2, 0.0) == doctest::Approx(2.0 / 3.0));
    // H_2(eta) = 2 (sin eta - eta cos eta) / eta^3
    for (double e : {0.1, 1.0, 4.0, 30.0}) {
        CHECK(H_n_eval(2, e) == doctest::Approx(2.0 * (std::sin(e) - e * std::cos(e)) / (e * e * e)).epsilon(1e-12));
    }
    for (double e : {-3.0, 0.0, 0.7, 2.5, 19.0, 300.0}) CHECK(H_n_eval(1, e) == doctest::Approx(F_n_eval(1, e)));
}

TEST_CASE("F_n and H_n are half the transforms of the envelopes") {
    for (int n : {1, 2, 5, 12}) {
        const FourierTransform g(g_shape(n));
        const FourierTransform f(f_shape(n));
        for (double e : {0.0, 0.25, 1.0, 3.0, 7.0, 11.5, 40.0, 123.0}) {
            CHECK(2.0 * F_n_eval(n, e) == doctest::Approx(g(e).real()).epsilon(1e-10));
            CHECK(2.0 * H_n_eval(n, e) == doctest::Approx(f(e).real()).epsilon(1e-10));
        }
    }
}

TEST_CASE("conjugate symmetry, and evenness for even functions") {
    auto g = testgen::rng(30);
    for (int i = 0; i < 20; ++i) {
        const PiecewisePoly f = testgen::piecewise(g);
        if (f.is_zero()) continue;
        const FourierTransform ft(f);
        const double w = std::uniform_real_distribution<double>(-30, 30)(g);
        CHECK(std::abs(ft(-w) - std::conj(ft(w))) <= 1e-9 * (1.0 + std::abs(ft(w))));
    }
    const FourierTransform rect3(rect_p_explicit(3));
    for (double w : {0.4, 5.0, 60.0}) CHECK(std::abs(rect3(w).imag()) < 1e-13);
}

TEST_CASE("frequency moments of simple functions") {
    const QuadratureResult t0 = quad_freq_moment(tent(), 0, 1e-8);
    CHECK(t0.value == doctest::Approx(2.0 / 3.0).epsilon(1e-7));
    CHECK(t0.abs_error_estimate < 1e-7);
    CHECK(quad_freq_moment(tent(), 2, 1e-8).value == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(quad_freq_moment(rect_p_explicit(3), 2, 1e-8).value == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(quad_freq_moment(unit_rect(), 0, 1e-6).value == doctest::Approx(1.0).epsilon(1e-5));
    CHECK_THROWS_AS((void)quad_freq_moment(unit_rect(), 2, 1e-6), DivergentIntegral);
    CHECK_THROWS_AS((void)quad_freq_moment(tent(), 1, 1e-6), std::invalid_argument);
}

TEST_CASE("Parseval on random continuous functions") {
    auto g = testgen::rng(31);
    for (int i = 0; i < 4; ++i) {
        const PiecewisePoly f = random_f_plus_zero(g);
        const double exact0 = norm_sq(f).to_double();
        const double exact2 = moment(derivative(f), 0, Power::squared).to_double();
        CHECK(quad_freq_moment(f, 0, 1e-5).value == doctest::Approx(exact0).epsilon(1e-4));
        // the k = 2 tail decays like 1/R, so keep this one loose
        CHECK(quad_freq_moment(f, 2, 1e-4).value == doctest::Approx(exact2).epsilon(1e-3));
    }
}

TEST_CASE("cross product of the even reflections matches the derivative split") {
    // For f = f_s + f_d split at 0, 2 pi (1/2pi) int w^2 Re(fhat_s conj fhat_d)
    // equals 2 pi (||u_odd||^2 - ||u_even||^2) / (2 pi) with u = f'.
    const PiecewisePoly f = g_shape(2);
    const PiecewisePoly left = restrict(f, Rational(-1), Rational(0));
    const PiecewisePoly right = restrict(f, Rational(0), Rational(1));
    const PiecewisePoly fs = left + reflect(left, Rational(0));
    const PiecewisePoly fd = right + reflect(right, Rational(0));
    // g_2 is even, so f_s = f_d = f and the product is ||f'||^2.
    const double expect = moment(derivative(f), 0, Power::squared).to_double();
    CHECK(quad_freq_product(fs, fd, 2, 1e-8).value == doctest::Approx(expect).epsilon(1e-7));
}

TEST_CASE("integral of F_n squared") {
    // F_n = ghat_n / 2, so int F_n^2 = (2 pi / 4) ||g_n||^2 = pi / (2n + 1)
    for (int n : {1, 2, 4}) {
        const QuadratureResult q = integrate_F_n_squared(n, 1e-8);
        CHECK(q.value == doctest::Approx(pi / (2 * n + 1)).epsilon(1e-7));
    }
}

TEST_CASE("atom frequency mean") {
    const QuadratureResult q = atom_frequency_mean(tent(), {Rational(2), Rational(3), Rational(1)}, 1e-8);
    CHECK(std::abs(q.value - 2.0 * pi * 3.0) < 1e-6);
    const QuadratureResult z = atom_frequency_mean(g_shape(3), {Rational(1, 2), Rational(0), Rational(7)}, 1e-5);
    CHECK(std::abs(z.value) < 1e-5);
}

TEST_CASE("Gauss-Kronrod on smooth integrands") {
    const PanelSum s = gauss_kronrod([](double x) { return std::cos(x); }, 0.0, pi / 2, 0.5);
    CHECK(s.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.panels == 4);
    CHECK(gauss_kronrod([](double x) { return x * x; }, -1.0, 2.0, 10.0).value == doctest::Approx(3.0));
}

}  // TEST_SUITE
