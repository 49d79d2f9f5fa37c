#pragma once

// Double-precision frequency-domain evaluation of piecewise polynomials and
// quadrature of frequency moments. Used as an independent numerical
// cross-check of the exact time-domain results.
//
// Convention: fhat(w) = int e^{-i w x} f(x) dx.

#include "uncert/moments.hpp"
#include "uncert/piecewise.hpp"

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace uncert {

struct SpectrumSample {
    double omega = 0.0;
    double re = 0.0;
    double im = 0.0;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    double truncation_radius = 0.0;
};

/// The frequency integral does not converge absolutely (e.g. k = 2 on a
/// function with a jump).
class DivergentIntegral : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The error estimate could not be brought under the tolerance within the
/// panel budget.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precomputed closed-form transform of one piecewise polynomial.
///
/// Each piece is re-expanded about its centre, P(c + h z) on z in [-1, 1].
/// Pieces with |w| h < degree + 1 use the Taylor series in w; the rest use
/// the integration-by-parts closed form.
class FourierTransform {
public:
    explicit FourierTransform(const PiecewisePoly& f);

    [[nodiscard]] std::complex<double> operator()(double omega) const;

    /// Jumps of f and its derivatives at one breakpoint:
    /// jumps[m] = f^(m)(x+) - f^(m)(x-), computed exactly then rounded.
    struct Knot {
        double x = 0.0;
        std::vector<double> jumps;
    };
    [[nodiscard]] const std::vector<Knot>& knots() const { return knots_; }
    [[nodiscard]] double span() const { return span_; }

private:
    struct Piece {
        double center = 0.0;
        double half = 0.0;
        std::vector<double> coeffs;   // of P(c + h z) in z
        std::vector<double> d_plus;   // k-th z-derivative at z = +1
        std::vector<double> d_minus;  // k-th z-derivative at z = -1
        double abs_sum = 0.0;
    };
    static std::complex<double> piece_integral(const Piece& p, double theta);

    std::vector<Piece> pieces_;
    std::vector<Knot> knots_;
    double span_ = 0.0;
};

[[nodiscard]] SpectrumSample fourier_eval(const PiecewisePoly& f, double omega);

/// F_n(eta) = int_0^1 (1 - y)^n cos(eta y) dy, n >= 1.
[[nodiscard]] double F_n_eval(int n, double eta);
/// H_n(eta) = int_0^1 (1 - y^n) cos(eta y) dy, n >= 1.
[[nodiscard]] double H_n_eval(int n, double eta);

/// (1/2pi) int_R w^k |fhat(w)|^2 dw for k in {0, 2}. Jumps of magnitude at
/// most jump_tol are excluded from the divergence test and their contribution
/// is bounded in the error estimate instead.
[[nodiscard]] QuadratureResult quad_freq_moment(const PiecewisePoly& f, int k, double rel_tol,
                                                double jump_tol = 0.0);

/// (1/2pi) int_R w^k Re(fhat(w) conj(ghat(w))) dw.
[[nodiscard]] QuadratureResult quad_freq_product(const PiecewisePoly& f, const PiecewisePoly& g, int k,
                                                 double rel_tol, double jump_tol = 0.0);

/// int_R F_n(eta)^2 d eta by quadrature of F_n_eval.
[[nodiscard]] QuadratureResult integrate_F_n_squared(int n, double rel_tol);

/// Frequency mean (1 / (2pi ||G||^2)) int w |Ghat(w)|^2 dw of the atom
/// G(x) = env((x - u)/t) e^{2 pi i xi x}, by direct quadrature over a window
/// symmetric about w = 0.
[[nodiscard]] QuadratureResult atom_frequency_mean(const PiecewisePoly& envelope, const AtomParams& gamma,
                                                   double rel_tol);

/// Composite 15-point Gauss-Kronrod over [a, b] with uniform panels of at
/// most max_width. value is the Kronrod sum; error the summed |K - G|.
struct PanelSum {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;
    long panels = 0;
};
[[nodiscard]] PanelSum gauss_kronrod(const std::function<double(double)>& fn, double a, double b, double max_width);

}  // namespace uncert
