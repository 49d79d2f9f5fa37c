#pragma once

// The two wavelet dictionaries built on the envelopes
//   G: (1 - |x|)^n        on [-1, 1], n >= 0
//   F: (1 - |x|^n)        on [-1, 1], n >= 1
// and their closed-form moments at unit scale.

#include "uncert/moments.hpp"
#include "uncert/piecewise.hpp"
#include "uncert/report.hpp"

#include <string>
#include <vector>

namespace uncert {

enum class Family { G, F };

[[nodiscard]] std::string to_string(Family f);
/// "G"/"F", case-insensitive. Throws std::invalid_argument otherwise.
[[nodiscard]] Family parse_family(const std::string& s);

struct DictionaryId {
    Family family = Family::G;
    int n = 1;
};

/// Unnormalised envelope shape plus the squared normalisation prefactor
/// (rational; the prefactor itself is a square root).
struct Envelope {
    PiecewisePoly shape;
    Rational prefactor_sq;
};

/// Throws std::invalid_argument for n < 0 (G) or n < 1 (F).
[[nodiscard]] Envelope envelope(const DictionaryId& id);

[[nodiscard]] Rational closed_sigma_x2(const DictionaryId& id);
[[nodiscard]] ExtReal closed_sigma_w2(const DictionaryId& id);
[[nodiscard]] ExtReal closed_uncertainty(const DictionaryId& id);

struct DictRow {
    DictionaryId id;
    Rational sigma_x2;
    ExtReal sigma_w2;
    ExtReal uncertainty;
};

/// Rows n = 1..n_max computed from the closed forms and from the moments of
/// the envelope. Any disagreement throws std::logic_error.
[[nodiscard]] std::vector<DictRow> dict_table(Family family, int n_max);

/// Over n in [1, n_max] (n_max >= 2): argmin is n = 1 with U = 3/10; for G, U
/// strictly increasing and below 1/2; for F, U strictly increasing and, when
/// n_max >= 100, U(n_max) / (n_max / 6) in [0.95, 1.05].
[[nodiscard]] ClaimReport verify_minimizer(Family family, int n_max);

}  // namespace uncert
