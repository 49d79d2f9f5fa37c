#include "uncert/piecewise.hpp"

#include "tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uncert {

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breaks_.empty() && pieces_.empty()) return;
    if (breaks_.size() < 2 || pieces_.size() != breaks_.size() - 1) {
        throw std::invalid_argument("piecewise polynomial needs one piece per breakpoint interval");
    }
    for (std::size_t i = 1; i < breaks_.size(); ++i) {
        if (!(breaks_[i - 1] < breaks_[i])) {
            throw std::invalid_argument("breakpoints must be strictly increasing (index " + std::to_string(i) + ")");
        }
    }
    canonicalize();
}

PiecewisePoly PiecewisePoly::indicator(const Rational& lo, const Rational& hi, const Rational& c) {
    return PiecewisePoly({lo, hi}, {Polynomial::constant(c)});
}

long PiecewisePoly::degree() const {
    long d = -1;
    for (const auto& p : pieces_) d = std::max(d, p.degree());
    return d;
}

void PiecewisePoly::canonicalize() {
    std::vector<Rational> b;
    std::vector<Polynomial> p;
    b.reserve(breaks_.size());
    p.reserve(pieces_.size());
    b.push_back(breaks_.front());
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (!p.empty() && p.back() == pieces_[i]) {
            b.back() = breaks_[i + 1];
        } else {
            p.push_back(pieces_[i]);
            b.push_back(breaks_[i + 1]);
        }
    }
    std::size_t first = 0;
    std::size_t last = p.size();
    while (first < last && p[first].is_zero()) ++first;
    while (last > first && p[last - 1].is_zero()) --last;
    if (first == last) {
        breaks_.clear();
        pieces_.clear();
        return;
    }
    breaks_.assign(b.begin() + static_cast<long>(first), b.begin() + static_cast<long>(last) + 1);
    pieces_.assign(std::make_move_iterator(p.begin() + static_cast<long>(first)),
                   std::make_move_iterator(p.begin() + static_cast<long>(last)));
}

namespace {

// Index of the piece whose half-open interval contains x, or size() if outside.
std::size_t locate(const PiecewisePoly& f, const Rational& x) {
    const auto& b = f.breakpoints();
    if (f.is_zero() || x < b.front() || x > b.back()) return f.size();
    if (x == b.back()) return f.size() - 1;
    const auto it = std::upper_bound(b.begin(), b.end(), x);
    return static_cast<std::size_t>(it - b.begin()) - 1;
}

std::vector<Rational> merged_grid(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> clip(const std::vector<Rational>& grid, const Rational& lo, const Rational& hi) {
    std::vector<Rational> out{lo};
    for (const auto& x : grid) {
        if (lo < x && x < hi) out.push_back(x);
    }
    out.push_back(hi);
    return out;
}

}  // namespace

Rational evaluate(const PiecewisePoly& f, const Rational& x) {
    const std::size_t i = locate(f, x);
    return i == f.size() ? Rational(0) : f.pieces()[i](x);
}

double evaluate(const PiecewisePoly& f, double x) {
    if (f.is_zero()) return 0.0;
    const auto& b = f.breakpoints();
    if (x < b.front().to_double() || x > b.back().to_double()) return 0.0;
    std::size_t i = 0;
    while (i + 1 < f.size() && x >= b[i + 1].to_double()) ++i;
    return f.pieces()[i](x);
}

PiecewisePoly affine(const PiecewisePoly& f, const Rational& lambda, const Rational& gamma, const Rational& tau) {
    if (gamma.is_zero()) throw std::invalid_argument("affine: gamma must be nonzero");
    if (f.is_zero() || lambda.is_zero()) return {};
    std::vector<Rational> b;
    std::vector<Polynomial> p;
    b.reserve(f.breakpoints().size());
    for (const auto& x : f.breakpoints()) b.push_back((x + tau) / gamma);
    for (const auto& piece : f.pieces()) p.push_back(lambda * compose_affine(piece, gamma, -tau));
    if (gamma.sign() < 0) {
        std::reverse(b.begin(), b.end());
        std::reverse(p.begin(), p.end());
    }
    return {std::move(b), std::move(p)};
}

PiecewisePoly reflect(const PiecewisePoly& f, const Rational& c) {
    return affine(f, Rational(1), Rational(-1), Rational(-2) * c);
}

std::vector<Polynomial> pieces_on_grid(const PiecewisePoly& f, const std::vector<Rational>& grid) {
    std::vector<Polynomial> out(grid.size() - 1);
    if (f.is_zero()) return out;
    const auto& b = f.breakpoints();
    std::size_t j = 0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const Rational& left = grid[k];
        if (left < b.front() || !(left < b.back())) continue;
        while (j + 1 < f.size() && !(left < b[j + 1])) ++j;
        out[k] = f.pieces()[j];
    }
    return out;
}

PiecewisePoly restrict(const PiecewisePoly& f, const Rational& lo, const Rational& hi) {
    if (f.is_zero()) return {};
    const Rational a = max(lo, f.lo());
    const Rational b = min(hi, f.hi());
    if (!(a < b)) return {};
    auto grid = clip(f.breakpoints(), a, b);
    auto pieces = pieces_on_grid(f, grid);
    return {std::move(grid), std::move(pieces)};
}

PiecewisePoly derivative(const PiecewisePoly& f, double tol) {
    if (f.is_zero()) return {};
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (!detail::negligible(interior_jump(f, i), tol)) {
            throw std::domain_error("derivative: interior jump at x = " + f.breakpoints()[i].str());
        }
    }
    std::vector<Polynomial> d;
    d.reserve(f.size());
    for (const auto& p : f.pieces()) d.push_back(derivative(p));
    return {f.breakpoints(), std::move(d)};
}

PiecewisePoly operator*(const PiecewisePoly& f, const PiecewisePoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const Rational lo = max(f.lo(), g.lo());
    const Rational hi = min(f.hi(), g.hi());
    if (!(lo < hi)) return {};
    auto grid = clip(merged_grid(f.breakpoints(), g.breakpoints()), lo, hi);
    const auto pf = pieces_on_grid(f, grid);
    const auto pg = pieces_on_grid(g, grid);
    std::vector<Polynomial> out(pf.size());
    for (std::size_t k = 0; k < pf.size(); ++k) out[k] = pf[k] * pg[k];
    return {std::move(grid), std::move(out)};
}

PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    auto grid = merged_grid(f.breakpoints(), g.breakpoints());
    const auto pf = pieces_on_grid(f, grid);
    const auto pg = pieces_on_grid(g, grid);
    std::vector<Polynomial> out(pf.size());
    for (std::size_t k = 0; k < pf.size(); ++k) out[k] = pf[k] + pg[k];
    return {std::move(grid), std::move(out)};
}

PiecewisePoly operator*(const Rational& c, const PiecewisePoly& f) {
    if (c.is_zero() || f.is_zero()) return {};
    std::vector<Polynomial> p;
    p.reserve(f.size());
    for (const auto& piece : f.pieces()) p.push_back(c * piece);
    return {f.breakpoints(), std::move(p)};
}

PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g) { return f + Rational(-1) * g; }

Rational moment(const PiecewisePoly& f, unsigned k, Power power) {
    Rational total;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Polynomial& p = f.pieces()[i];
        if (p.is_zero()) continue;
        const std::size_t len = power == Power::squared ? 2 * p.coeffs().size() - 1 : p.coeffs().size();
        const PowerIntegrals table(f.breakpoints()[i], f.breakpoints()[i + 1], len + k);
        total += power == Power::squared ? table.integrate_product(p, p, {k}).front() : table.integrate(p, k);
    }
    return total;
}

Rational interior_jump(const PiecewisePoly& f, std::size_t i) {
    if (i == 0 || i >= f.size()) throw std::out_of_range("interior_jump: not an interior breakpoint");
    const Rational& x = f.breakpoints()[i];
    return f.pieces()[i](x) - f.pieces()[i - 1](x);
}

std::string to_string(FunctionClass c) {
    switch (c) {
        case FunctionClass::f_supp: return "F_supp";
        case FunctionClass::f_plus_supp: return "F_plus_supp";
        case FunctionClass::f_plus_zero: return "F_plus_zero";
        case FunctionClass::p_plus_zero: return "P_plus_zero";
        case FunctionClass::none: break;
    }
    return "none";
}

std::string to_string(Nonnegativity n) {
    switch (n) {
        case Nonnegativity::proven: return "proven";
        case Nonnegativity::negative: return "negative";
        case Nonnegativity::not_verified: break;
    }
    return "not_verified";
}

namespace {

// Bernstein coefficients of p on [a, b]; all nonnegative implies p >= 0 there.
std::vector<Rational> bernstein_coefficients(const Polynomial& p, const Rational& a, const Rational& b) {
    const Polynomial q = compose_affine(p, b - a, a);
    const auto n = static_cast<unsigned>(std::max<long>(q.degree(), 0));
    std::vector<Rational> out(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational acc;
        for (unsigned i = 0; i <= k; ++i) {
            if (q[i].is_zero()) continue;
            acc += q[i] * binomial(k, i) / binomial(n, i);
        }
        out[k] = acc;
    }
    return out;
}

constexpr unsigned kProbeIntervals = 64;

}  // namespace

Nonnegativity check_nonnegative(const PiecewisePoly& f, double tol) {
    bool all_proven = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Polynomial& p = f.pieces()[i];
        const Rational& a = f.breakpoints()[i];
        const Rational& b = f.breakpoints()[i + 1];
        const auto bern = bernstein_coefficients(p, a, b);
        if (std::none_of(bern.begin(), bern.end(), [tol](const Rational& c) { return detail::below(c, tol); })) {
            continue;
        }
        all_proven = false;
        const Rational step = (b - a) / Rational(kProbeIntervals);
        for (unsigned k = 0; k <= kProbeIntervals; ++k) {
            if (detail::below(p(a + step * Rational(k)), tol)) return Nonnegativity::negative;
        }
    }
    return all_proven ? Nonnegativity::proven : Nonnegativity::not_verified;
}

bool is_even_about(const PiecewisePoly& f, const Rational& c, double tol) {
    const PiecewisePoly r = reflect(f, c);
    if (tol == 0.0) return r == f;
    if (f.is_zero()) return true;
    const auto grid = merged_grid(f.breakpoints(), r.breakpoints());
    const auto pf = pieces_on_grid(f, grid);
    const auto pr = pieces_on_grid(r, grid);
    for (std::size_t k = 0; k < pf.size(); ++k) {
        const Polynomial diff = pf[k] - pr[k];
        for (const auto& coeff : diff.coeffs()) {
            if (!detail::negligible(coeff, tol)) return false;
        }
    }
    return true;
}

ClassTag classify(const PiecewisePoly& f, double tol) {
    ClassTag tag;
    if (f.is_zero()) {
        tag.nonnegativity = Nonnegativity::proven;
        tag.even = true;
        tag.cls = FunctionClass::p_plus_zero;
        return tag;
    }
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (!detail::negligible(interior_jump(f, i), tol)) tag.interior_jumps.push_back(f.breakpoints()[i]);
    }
    tag.left_value = f.pieces().front()(f.lo());
    tag.right_value = f.pieces().back()(f.hi());
    tag.nonnegativity = check_nonnegative(f, tol);
    tag.even = is_even_about(f, (f.lo() + f.hi()) / Rational(2), tol);

    if (!tag.interior_jumps.empty()) return tag;
    tag.cls = FunctionClass::f_supp;
    if (tag.nonnegativity == Nonnegativity::negative) return tag;
    tag.cls = FunctionClass::f_plus_supp;
    if (!detail::negligible(tag.left_value, tol) || !detail::negligible(tag.right_value, tol)) return tag;
    tag.cls = FunctionClass::f_plus_zero;
    if (tag.even) tag.cls = FunctionClass::p_plus_zero;
    return tag;
}

}  // namespace uncert
