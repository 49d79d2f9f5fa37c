#pragma once

// Spatial and frequency means/variances and the uncertainty product, computed
// exactly on the time side.

#include "uncert/piecewise.hpp"
#include "uncert/rational.hpp"

#include <optional>
#include <string>

namespace uncert {

/// A nonnegative-or-finite rational extended with +infinity.
class ExtReal {
public:
    ExtReal() = default;
    ExtReal(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    static ExtReal infinity() { return ExtReal(Infinite{}); }

    [[nodiscard]] bool is_finite() const { return value_.has_value(); }
    /// Throws std::logic_error when infinite.
    [[nodiscard]] const Rational& value() const;
    [[nodiscard]] double to_double() const;
    /// Rational string, or "inf".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const ExtReal&, const ExtReal&) = default;

private:
    struct Infinite {};
    explicit ExtReal(Infinite) {}
    std::optional<Rational> value_;
};

/// Finite * finite is exact; positive * inf = inf; 0 * inf throws std::domain_error.
[[nodiscard]] ExtReal operator*(const ExtReal& a, const ExtReal& b);

/// gamma = (t, xi, u): scale t > 0, modulation frequency xi, translation u.
struct AtomParams {
    Rational t{1};
    Rational xi{0};
    Rational u{0};
};

struct MomentsReport {
    Rational alpha;
    Rational beta_coeff;  // beta = 2*pi*beta_coeff
    Rational sigma_x2;
    ExtReal sigma_w2;
    ExtReal uncertainty;
    Rational norm_sq;
};

/// True when sigma_w2 is finite: no interior jump and both boundary values zero
/// (each up to tol; tol == 0 is exact).
[[nodiscard]] bool has_finite_frequency_variance(const PiecewisePoly& f, double tol = 0.0);

// All of the following throw std::invalid_argument for the zero function.

[[nodiscard]] Rational norm_sq(const PiecewisePoly& f);
[[nodiscard]] Rational alpha(const PiecewisePoly& f);
/// (int x^2 f^2 / int f^2) - alpha^2.
[[nodiscard]] Rational sigma_x2(const PiecewisePoly& f);
/// ||f'||^2 / ||f||^2 via Plancherel when finite, otherwise +infinity.
[[nodiscard]] ExtReal sigma_w2(const PiecewisePoly& f, double tol = 0.0);
[[nodiscard]] ExtReal uncertainty(const PiecewisePoly& f, double tol = 0.0);

/// Moments of the real envelope itself (beta_coeff = 0).
[[nodiscard]] MomentsReport moments(const PiecewisePoly& f, double tol = 0.0);

/// Moments of the atom env((x - u)/t) e^{2 pi i xi x}, derived from the
/// envelope by the scaling/translation/modulation covariance rules.
/// Throws std::invalid_argument if t <= 0.
[[nodiscard]] MomentsReport atom_moments(const PiecewisePoly& envelope, const AtomParams& gamma, double tol = 0.0);

}  // namespace uncert
