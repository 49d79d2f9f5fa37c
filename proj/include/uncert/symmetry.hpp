#pragma once

// Even reflections of the two halves of a function, the even/odd split of its
// derivative, and checks of the even-minimizer bounds.

#include "uncert/moments.hpp"
#include "uncert/piecewise.hpp"
#include "uncert/report.hpp"

#include <optional>
#include <string>

namespace uncert {

enum class Axis { origin, barycenter };

[[nodiscard]] std::string to_string(Axis a);
/// "origin" / "barycenter". Throws std::invalid_argument otherwise.
[[nodiscard]] Axis parse_axis(const std::string& s);

/// f_s: the part of f left of the axis together with its mirror image.
/// f_d: the part right of the axis together with its mirror image.
struct ReflectionPair {
    PiecewisePoly f_s;
    PiecewisePoly f_d;
    Rational axis;
    Rational w;  // ||f_d||^2 / (||f_d||^2 + ||f_s||^2)
};

/// Throws std::invalid_argument for the zero function, and for the origin
/// axis when the support is not of the form [-a, a].
[[nodiscard]] ReflectionPair reflections(const PiecewisePoly& f, Axis axis);

struct SplitReport {
    Rational u_even_norm_sq;
    Rational u_odd_norm_sq;
    Rational cross_term_exact;      // coefficient of 2 pi: ||u_odd||^2 - ||u_even||^2
    double cross_term_quad = 0.0;   // int w^2 fhat_s fhat_d dw by quadrature
    double cross_term_quad_error = 0.0;
};

/// u = f' split into even and odd parts about 0. Requires support [-a, a] and
/// no interior jump above tol. The quadrature uses the origin reflections.
[[nodiscard]] SplitReport even_odd_split(const PiecewisePoly& f, double tol = 0.0, double rel_tol = 1e-6);

struct BoundReport {
    bool centered = true;
    Rational axis;
    Rational w;
    ExtReal u_f;
    std::optional<ExtReal> u_s;  // empty when that half carries no mass
    std::optional<ExtReal> u_d;
    double cs_rhs = 0.0;         // (w sqrt(U_d) + (1 - w) sqrt(U_s))^2
    ClaimReport claims;
    std::string note;
};

/// Requires f in F+_0 (up to tol) with finite frequency variance; throws
/// std::invalid_argument otherwise. With centering the reflections are taken
/// about the barycenter; without, about the origin.
///
/// Claims: the min-bound U[f] >= min(U[f_s], U[f_d]) (exact), the weighted
/// Cauchy-Schwarz bound (double, slack 1e-12), the mass identity and both
/// convex decompositions (exact).
[[nodiscard]] BoundReport theorem_bound_check(const PiecewisePoly& f, bool centering = true, double tol = 0.0);

struct NormalizedPair {
    std::optional<PiecewisePoly> psi_s;
    std::optional<PiecewisePoly> psi_d;
    std::optional<ExtReal> u_s;
    std::optional<ExtReal> u_d;
    ClaimReport claims;
};

/// psi_i(x) = f_i((r_i / a) x + axis), r_i the half-width of the support of
/// f_i: even, on [-a, a], with U[psi_i] = U[f_i]. A half without mass is
/// omitted. Requires a > 0.
[[nodiscard]] NormalizedPair corollary_normalize(const ReflectionPair& pair, const Rational& a, double tol = 0.0);

}  // namespace uncert
