#pragma once

// The p-fold self-convolutions rect^{p} of the unit rectangle (cardinal
// B-splines centred at the origin).

#include "uncert/moments.hpp"
#include "uncert/piecewise.hpp"
#include "uncert/report.hpp"

#include <vector>

namespace uncert {

/// rect^{p} from the truncated-power sum
///   (1/(p-1)!) sum_j (-1)^j C(p,j) max(0, x + p/2 - j)^{p-1},
/// expanded piece by piece between the knots j - p/2. Throws for p < 1.
[[nodiscard]] PiecewisePoly rect_p_explicit(int p);

/// rect^{p} by repeated unit-window integration of rect^{p-1}. Throws for p < 1.
[[nodiscard]] PiecewisePoly rect_p_recursive(int p);

/// x -> int_{x-h}^{x+h} f(s) ds, exact. Requires h > 0.
[[nodiscard]] PiecewisePoly window_integral(const PiecewisePoly& f, const Rational& h);

struct ScanRow {
    int p = 0;
    Rational u_p;       // spatial variance
    ExtReal nu_p;       // frequency variance, ||B'||^2 / ||B||^2
    ExtReal uncertainty;
    double uncertainty_float = 0.0;
};

/// Exact rows for p in [p_min, p_max], sorted by p. Requires 2 <= p_min <= p_max.
[[nodiscard]] std::vector<ScanRow> rect_scan(int p_min, int p_max);

/// Checks over [2, p_max] (p_max >= 8): strict decrease of U, U > 1/4 on every
/// row, and (U(p) - 1/4) * p <= 2 (U(8) - 1/4) * 8 for p in [8, p_max].
[[nodiscard]] ClaimReport limit_check(int p_max);
[[nodiscard]] ClaimReport limit_check(const std::vector<ScanRow>& rows_from_2);

}  // namespace uncert
