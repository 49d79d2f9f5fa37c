#include "uncert/bspline.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace uncert {

namespace {

void require_order(int p) {
    if (p < 1) throw std::invalid_argument("rect^{p} needs p >= 1, got " + std::to_string(p));
}

// (x + c)^n
Polynomial shifted_power(const Rational& c, unsigned n) {
    std::vector<Rational> coeffs(n + 1);
    Rational cp(1);
    for (unsigned k = 0; k <= n; ++k) {
        // coefficient of x^{n-k} is C(n,k) c^k
        coeffs[n - k] = binomial(n, k) * cp;
        cp *= c;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace

PiecewisePoly rect_p_explicit(int p) {
    require_order(p);
    const Rational half_p(p, 2);
    if (p == 1) return PiecewisePoly::indicator(-half_p, half_p);

    const auto n = static_cast<unsigned>(p - 1);
    const Rational inv_fact = Rational(1) / factorial(n);
    std::vector<Rational> knots;
    std::vector<Polynomial> pieces;
    Polynomial acc;
    for (int k = 0; k <= p; ++k) knots.push_back(Rational(k) - half_p);
    // On [k - p/2, k + 1 - p/2) the truncated powers with j <= k are active.
    for (int k = 0; k < p; ++k) {
        Rational c = binomial(static_cast<unsigned>(p), static_cast<unsigned>(k)) * inv_fact;
        if (k % 2 == 1) c = -c;
        acc += c * shifted_power(half_p - Rational(k), n);
        pieces.push_back(acc);
    }
    return {std::move(knots), std::move(pieces)};
}

PiecewisePoly window_integral(const PiecewisePoly& f, const Rational& h) {
    if (h.sign() <= 0) throw std::invalid_argument("window_integral: half-width must be positive");
    if (f.is_zero()) return {};
    const auto& b = f.breakpoints();

    // Primitive A with A = 0 left of the support; constant total to the right.
    std::vector<Polynomial> prim;
    Rational running;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Polynomial a = antiderivative(f.pieces()[i]);
        prim.push_back(a + Polynomial::constant(running - a(b[i])));
        running += a(b[i + 1]) - a(b[i]);
    }
    const Rational total = running;
    auto primitive_near = [&](const Rational& y) -> Polynomial {
        if (y < b.front()) return {};
        if (y > b.back()) return Polynomial::constant(total);
        const auto it = std::upper_bound(b.begin(), b.end(), y);
        const auto i = std::min<std::size_t>(static_cast<std::size_t>(it - b.begin()) - 1, f.size() - 1);
        return prim[i];
    };

    std::vector<Rational> grid;
    for (const auto& x : b) {
        grid.push_back(x - h);
        grid.push_back(x + h);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<Polynomial> pieces;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const Rational mid = (grid[k] + grid[k + 1]) / Rational(2);
        const Polynomial upper = compose_affine(primitive_near(mid + h), Rational(1), h);
        const Polynomial lower = compose_affine(primitive_near(mid - h), Rational(1), -h);
        pieces.push_back(upper - lower);
    }
    return {std::move(grid), std::move(pieces)};
}

PiecewisePoly rect_p_recursive(int p) {
    require_order(p);
    const Rational half(1, 2);
    PiecewisePoly b = PiecewisePoly::indicator(-half, half);
    for (int q = 2; q <= p; ++q) b = window_integral(b, half);
    return b;
}

namespace {

ScanRow scan_row(int p) {
    const PiecewisePoly b = rect_p_explicit(p);
    const MomentsReport m = moments(b);
    ScanRow row;
    row.p = p;
    row.u_p = m.sigma_x2;
    row.nu_p = m.sigma_w2;
    row.uncertainty = m.uncertainty;
    row.uncertainty_float = m.uncertainty.to_double();
    return row;
}

}  // namespace

std::vector<ScanRow> rect_scan(int p_min, int p_max) {
    if (p_min < 2 || p_max < p_min) {
        throw std::invalid_argument("rect_scan needs 2 <= p_min <= p_max");
    }
    // Rows are independent; collected in p order.
    std::vector<std::future<ScanRow>> jobs;
    for (int p = p_min; p <= p_max; ++p) jobs.push_back(std::async(std::launch::async, scan_row, p));
    std::vector<ScanRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

ClaimReport limit_check(const std::vector<ScanRow>& rows) {
    ClaimReport report;
    const Rational quarter(1, 4);
    if (rows.empty() || rows.front().p != 2 || rows.back().p < 8) {
        throw std::invalid_argument("limit_check needs consecutive rows from p = 2 to p_max >= 8");
    }

    std::string bad;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].uncertainty.value() < rows[i - 1].uncertainty.value())) {
            bad = "p = " + std::to_string(rows[i].p);
            break;
        }
    }
    report.add("U strictly decreasing on [2, p_max]", bad.empty(), bad);

    bad.clear();
    for (const auto& r : rows) {
        if (!(r.uncertainty.value() > quarter)) {
            bad = "p = " + std::to_string(r.p);
            break;
        }
    }
    report.add("U > 1/4 for every p", bad.empty(), bad);

    const auto excess = [&](const ScanRow& r) { return (r.uncertainty.value() - quarter) * Rational(r.p); };
    const auto at8 = std::find_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.p == 8; });
    const Rational bound = Rational(2) * excess(*at8);
    bad.clear();
    for (auto it = at8; it != rows.end(); ++it) {
        if (excess(*it) > bound) {
            bad = "p = " + std::to_string(it->p);
            break;
        }
    }
    report.add("(U(p) - 1/4) p <= 2 (U(8) - 1/4) 8 on [8, p_max]", bad.empty(), bad);
    return report;
}

ClaimReport limit_check(int p_max) {
    if (p_max < 8) throw std::invalid_argument("limit_check needs p_max >= 8");
    return limit_check(rect_scan(2, p_max));
}

}  // namespace uncert
