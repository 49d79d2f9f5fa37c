#pragma once

#include "uncert/rational.hpp"

#include <cmath>

namespace uncert::detail {

// tol == 0 means exact comparison.
inline bool negligible(const Rational& v, double tol) {
    return tol == 0.0 ? v.is_zero() : std::fabs(v.to_double()) <= tol;
}

inline bool below(const Rational& v, double tol) {
    return tol == 0.0 ? v.sign() < 0 : v.to_double() < -tol;
}

}  // namespace uncert::detail
