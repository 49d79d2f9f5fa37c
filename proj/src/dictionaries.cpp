#include "uncert/dictionaries.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <stdexcept>

namespace uncert {

std::string to_string(Family f) { return f == Family::G ? "G" : "F"; }

Family parse_family(const std::string& s) {
    if (s.size() == 1) {
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (c == 'G') return Family::G;
        if (c == 'F') return Family::F;
    }
    throw std::invalid_argument("unknown dictionary family '" + s + "' (expected G or F)");
}

namespace {

void require_valid(const DictionaryId& id) {
    const int min_n = id.family == Family::G ? 0 : 1;
    if (id.n < min_n) {
        throw std::invalid_argument("dictionary " + to_string(id.family) + " needs n >= " + std::to_string(min_n) +
                                    ", got " + std::to_string(id.n));
    }
}

Rational r(long v) { return Rational(v); }

}  // namespace

Envelope envelope(const DictionaryId& id) {
    require_valid(id);
    const auto n = static_cast<std::size_t>(id.n);
    const long nl = id.n;
    if (id.family == Family::G) {
        const Rational prefactor_sq = Rational(2 * nl + 1, 2);
        if (n == 0) return {PiecewisePoly::indicator(r(-1), r(1)), prefactor_sq};
        Polynomial left = Polynomial::constant(r(1));
        Polynomial right = Polynomial::constant(r(1));
        for (std::size_t k = 0; k < n; ++k) {
            left = left * Polynomial({r(1), r(1)});
            right = right * Polynomial({r(1), r(-1)});
        }
        return {PiecewisePoly({r(-1), r(0), r(1)}, {left, right}), prefactor_sq};
    }
    const Rational sign = n % 2 == 0 ? r(1) : r(-1);
    const Polynomial left = Polynomial::constant(r(1)) - Polynomial::monomial(n, sign);
    const Polynomial right = Polynomial::constant(r(1)) - Polynomial::monomial(n);
    return {PiecewisePoly({r(-1), r(0), r(1)}, {left, right}), Rational((2 * nl + 1) * (nl + 1), 4 * nl * nl)};
}

Rational closed_sigma_x2(const DictionaryId& id) {
    require_valid(id);
    const Rational n(id.n);
    if (id.family == Family::G) return Rational(1) / (r(2) * n * n + r(5) * n + r(3));
    return (r(2) * n + r(1)) * (n + r(1)) / (r(3) * (r(2) * n * n + r(9) * n + r(9)));
}

ExtReal closed_sigma_w2(const DictionaryId& id) {
    require_valid(id);
    const Rational n(id.n);
    if (id.family == Family::G) {
        if (id.n == 0) return ExtReal::infinity();
        return n * n * (r(2) * n + r(1)) / (r(2) * n - r(1));
    }
    return (r(2) * n + r(1)) * (n + r(1)) / (r(2) * (r(2) * n - r(1)));
}

ExtReal closed_uncertainty(const DictionaryId& id) {
    require_valid(id);
    const Rational n(id.n);
    if (id.family == Family::G) {
        if (id.n == 0) return ExtReal::infinity();
        return n * n * (r(2) * n + r(1)) / ((r(2) * n * n + r(5) * n + r(3)) * (r(2) * n - r(1)));
    }
    const Rational a = r(2) * n + r(1);
    const Rational b = n + r(1);
    return a * a * b * b / (r(6) * (r(2) * n - r(1)) * (r(2) * n * n + r(9) * n + r(9)));
}

namespace {

DictRow table_row(Family family, int n) {
    const DictionaryId id{family, n};
    const MomentsReport m = moments(envelope(id).shape);
    DictRow row{id, closed_sigma_x2(id), closed_sigma_w2(id), closed_uncertainty(id)};
    if (m.sigma_x2 != row.sigma_x2 || m.sigma_w2 != row.sigma_w2 || m.uncertainty != row.uncertainty) {
        throw std::logic_error("dictionary " + to_string(family) + ", n = " + std::to_string(n) +
                               ": closed form disagrees with the moments pipeline (U " + row.uncertainty.str() +
                               " vs " + m.uncertainty.str() + ")");
    }
    return row;
}

}  // namespace

std::vector<DictRow> dict_table(Family family, int n_max) {
    if (n_max < 1) throw std::invalid_argument("dict_table needs n_max >= 1");
    std::vector<std::future<DictRow>> jobs;
    for (int n = 1; n <= n_max; ++n) jobs.push_back(std::async(std::launch::async, table_row, family, n));
    std::vector<DictRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

ClaimReport verify_minimizer(Family family, int n_max) {
    if (n_max < 2) throw std::invalid_argument("verify_minimizer needs n_max >= 2");
    std::vector<Rational> u;
    for (int n = 1; n <= n_max; ++n) u.push_back(closed_uncertainty({family, n}).value());

    ClaimReport report;
    const auto min_it = std::min_element(u.begin(), u.end());
    const long argmin = (min_it - u.begin()) + 1;
    report.add("argmin over n is 1", argmin == 1, "argmin n = " + std::to_string(argmin));
    report.add("minimum value is 3/10", *min_it == Rational(3, 10), "min U = " + min_it->str());

    int first_bad = 0;
    for (std::size_t i = 1; i < u.size() && first_bad == 0; ++i) {
        if (!(u[i - 1] < u[i])) first_bad = static_cast<int>(i) + 1;
    }
    report.add("U strictly increasing in n", first_bad == 0,
               first_bad ? "fails at n = " + std::to_string(first_bad) : std::string{});

    if (family == Family::G) {
        const bool below_half =
            std::all_of(u.begin(), u.end(), [](const Rational& v) { return v < Rational(1, 2); });
        report.add("U < 1/2 for every n", below_half, "U(n_max) = " + std::to_string(u.back().to_double()));
    } else if (n_max >= 100) {
        const double ratio = u.back().to_double() / (n_max / 6.0);
        report.add("U(n_max) / (n_max/6) in [0.95, 1.05]", ratio >= 0.95 && ratio <= 1.05,
                   "ratio = " + std::to_string(ratio));
    }
    return report;
}

}  // namespace uncert
