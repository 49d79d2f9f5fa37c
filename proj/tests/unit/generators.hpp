#pragma once

// Seeded generators for the property tests. UNCERT_SEED overrides the seed.

#include "uncert/piecewise.hpp"
#include "uncert/verify.hpp"

#include <random>

namespace testgen {

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(uncert::property_seed() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

inline int integer(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline uncert::Rational rational(std::mt19937_64& g, int mag = 9, int max_den = 7) {
    return {integer(g, -mag, mag), integer(g, 1, max_den)};
}

inline uncert::Rational nonzero_rational(std::mt19937_64& g, int mag = 9, int max_den = 7) {
    for (;;) {
        uncert::Rational r = rational(g, mag, max_den);
        if (!r.is_zero()) return r;
    }
}

inline uncert::Polynomial polynomial(std::mt19937_64& g, int max_degree = 4) {
    std::vector<uncert::Rational> c(static_cast<std::size_t>(integer(g, 0, max_degree) + 1));
    for (auto& x : c) x = rational(g);
    return uncert::Polynomial(std::move(c));
}

/// Arbitrary (possibly discontinuous) piecewise polynomial with 1..4 pieces.
inline uncert::PiecewisePoly piecewise(std::mt19937_64& g) {
    std::vector<uncert::Rational> b{rational(g, 4, 3)};
    const int pieces = integer(g, 1, 4);
    std::vector<uncert::Polynomial> p;
    for (int i = 0; i < pieces; ++i) {
        b.push_back(b.back() + uncert::Rational(integer(g, 1, 5), integer(g, 1, 3)));
        p.push_back(polynomial(g));
    }
    return {std::move(b), std::move(p)};
}

}  // namespace testgen
