#pragma once

// The reproduction suite: every acceptance check, grouped by criterion, and
// the seeded random generator behind the property checks.

#include "uncert/piecewise.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace uncert {

struct CheckResult {
    int criterion = 0;
    std::string group;  // dictionary, rect, symmetry, property, spectrum
    std::string claim;
    std::string expected;
    std::string got;
    bool ok = false;
};

struct VerifyOptions {
    /// Substring of a group name; when no group matches, of a claim name.
    std::string filter;
    /// Only this criterion (1..6) when nonzero.
    int criterion = 0;
    /// Deliberate corruption for mutation testing. "closed-form" perturbs one
    /// dictionary closed form.
    std::string inject_fault;
    std::uint64_t seed = 0;
    int cases = 50;
};

/// UNCERT_SEED if set and numeric, else a fixed default.
[[nodiscard]] std::uint64_t property_seed();

/// Random member of F+_0: continuous, nonnegative, zero at both ends, on 2 to
/// 5 breakpoints with small-denominator rationals.
[[nodiscard]] PiecewisePoly random_f_plus_zero(std::mt19937_64& rng);

[[nodiscard]] std::vector<CheckResult> run_checks(const VerifyOptions& opts);

}  // namespace uncert
