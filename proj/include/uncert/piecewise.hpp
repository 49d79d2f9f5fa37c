#pragma once

// Compactly supported piecewise polynomials with exact rational breakpoints,
// and the function classes built on them.

#include "uncert/polynomial.hpp"
#include "uncert/rational.hpp"

#include <string>
#include <vector>

namespace uncert {

/// f(x) = sum_i P_i(x) 1_[b_i, b_{i+1})(x), with the last interval closed on
/// the right. Zero outside [b_0, b_n].
///
/// Canonical form: adjacent pieces with identical polynomials are merged and
/// zero pieces at either edge are trimmed. The identically zero function has
/// no breakpoints and no pieces.
class PiecewisePoly {
public:
    PiecewisePoly() = default;
    /// Throws std::invalid_argument unless breakpoints are strictly increasing
    /// and there is exactly one piece per interval.
    PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

    /// c on [lo, hi].
    static PiecewisePoly indicator(const Rational& lo, const Rational& hi, const Rational& c = Rational(1));

    [[nodiscard]] const std::vector<Rational>& breakpoints() const { return breaks_; }
    [[nodiscard]] const std::vector<Polynomial>& pieces() const { return pieces_; }
    [[nodiscard]] std::size_t size() const { return pieces_.size(); }
    [[nodiscard]] bool is_zero() const { return pieces_.empty(); }
    [[nodiscard]] const Rational& lo() const { return breaks_.front(); }
    [[nodiscard]] const Rational& hi() const { return breaks_.back(); }
    [[nodiscard]] long degree() const;

    friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

private:
    void canonicalize();
    std::vector<Rational> breaks_;
    std::vector<Polynomial> pieces_;
};

/// Right-continuous on [b_i, b_{i+1}), left limit at the final breakpoint,
/// zero outside the support.
[[nodiscard]] Rational evaluate(const PiecewisePoly& f, const Rational& x);
[[nodiscard]] double evaluate(const PiecewisePoly& f, double x);

/// x -> lambda * f(gamma * x - tau). Throws std::invalid_argument if gamma == 0.
[[nodiscard]] PiecewisePoly affine(const PiecewisePoly& f, const Rational& lambda, const Rational& gamma,
                                   const Rational& tau);

/// x -> f(2c - x).
[[nodiscard]] PiecewisePoly reflect(const PiecewisePoly& f, const Rational& c);

/// f restricted to [lo, hi] (zero elsewhere).
[[nodiscard]] PiecewisePoly restrict(const PiecewisePoly& f, const Rational& lo, const Rational& hi);

/// Piecewise derivative on the same grid. Throws std::domain_error when f has
/// an interior jump larger than tol (the weak derivative is then a measure).
[[nodiscard]] PiecewisePoly derivative(const PiecewisePoly& f, double tol = 0.0);

[[nodiscard]] PiecewisePoly operator*(const PiecewisePoly& f, const PiecewisePoly& g);
[[nodiscard]] PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g);
[[nodiscard]] PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g);
[[nodiscard]] PiecewisePoly operator*(const Rational& c, const PiecewisePoly& f);

/// The polynomials of f on each interval of a grid that contains every
/// breakpoint of f inside [grid.front(), grid.back()].
[[nodiscard]] std::vector<Polynomial> pieces_on_grid(const PiecewisePoly& f, const std::vector<Rational>& grid);

enum class Power { linear, squared };

/// Exact integral of x^k f(x) (linear) or x^k f(x)^2 (squared).
[[nodiscard]] Rational moment(const PiecewisePoly& f, unsigned k, Power power);

/// Jump of f at breakpoint index i (value minus left limit), 0 < i < size().
[[nodiscard]] Rational interior_jump(const PiecewisePoly& f, std::size_t i);

enum class FunctionClass { none, f_supp, f_plus_supp, f_plus_zero, p_plus_zero };
enum class Nonnegativity { proven, not_verified, negative };

[[nodiscard]] std::string to_string(FunctionClass c);
[[nodiscard]] std::string to_string(Nonnegativity n);

struct ClassTag {
    FunctionClass cls = FunctionClass::none;
    std::vector<Rational> interior_jumps;  // breakpoints where the left limit differs from the value
    Rational left_value;                   // f(b_0+)
    Rational right_value;                  // f(b_n-)
    Nonnegativity nonnegativity = Nonnegativity::not_verified;
    bool even = false;                     // about the support midpoint
};

/// Classification into F_supp / F+_supp / F+_0 / P+_0. With tol > 0 the jump,
/// boundary-zero, nonnegativity, and evenness tests accept residues up to tol.
[[nodiscard]] ClassTag classify(const PiecewisePoly& f, double tol = 0.0);

/// Nonnegativity of f on its support: exact Bernstein proof per piece, then a
/// dyadic probe of 2^6 + 1 points per piece.
[[nodiscard]] Nonnegativity check_nonnegative(const PiecewisePoly& f, double tol = 0.0);

/// Structural evenness about c, exact when tol == 0.
[[nodiscard]] bool is_even_about(const PiecewisePoly& f, const Rational& c, double tol = 0.0);

}  // namespace uncert
