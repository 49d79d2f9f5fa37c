#pragma once

// Named functions used by the examples, the CLI, and the acceptance checks.

#include "uncert/piecewise.hpp"

namespace uncert {

/// 1 - |x| on [-1, 1].
[[nodiscard]] PiecewisePoly tent();
/// 1 on [-1/2, 1/2].
[[nodiscard]] PiecewisePoly unit_rect();

/// Piecewise cubic with a continuous join at 0:
///   p_-(x) = a_- x^3 + b_- x^2 + c_- x + d on [-1, 0)
///   p_+(x) = a_+ x^3 + b_+ x^2 + c_+ x + d on [0, 1]
/// with the ten-digit decimal coefficients converted exactly. f(-1) = 0 and
/// f(1) = -1e-10 exactly, so it only lies in F+_0 up to a tolerance.
[[nodiscard]] PiecewisePoly reference_cubic();

/// Boundary/jump tolerance under which reference_cubic() is in F+_0.
inline constexpr double kReferenceCubicTol = 1e-9;

}  // namespace uncert
