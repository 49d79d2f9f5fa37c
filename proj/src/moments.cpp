#include "uncert/moments.hpp"

#include "tolerance.hpp"

#include <limits>
#include <stdexcept>

namespace uncert {

const Rational& ExtReal::value() const {
    if (!value_) throw std::logic_error("ExtReal::value on infinity");
    return *value_;
}

double ExtReal::to_double() const {
    return value_ ? value_->to_double() : std::numeric_limits<double>::infinity();
}

std::string ExtReal::str() const { return value_ ? value_->str() : "inf"; }

ExtReal operator*(const ExtReal& a, const ExtReal& b) {
    if (a.is_finite() && b.is_finite()) return a.value() * b.value();
    const ExtReal& fin = a.is_finite() ? a : b;
    if (fin.is_finite()) {
        if (fin.value().is_zero()) throw std::domain_error("0 * inf is undefined");
        if (fin.value().sign() < 0) throw std::domain_error("negative * inf is outside the extended codomain");
    }
    return ExtReal::infinity();
}

namespace {

void require_nonzero(const PiecewisePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("moments of the zero function are undefined");
}

// int f^2, int x f^2, int x^2 f^2 in one pass over the pieces.
struct RawMoments {
    Rational m0, m1, m2;
};

RawMoments raw_moments(const PiecewisePoly& f) {
    RawMoments r;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Polynomial& p = f.pieces()[i];
        if (p.is_zero()) continue;
        const PowerIntegrals table(f.breakpoints()[i], f.breakpoints()[i + 1], 2 * p.coeffs().size() + 1);
        const auto m = table.integrate_product(p, p, {0, 1, 2});
        r.m0 += m[0];
        r.m1 += m[1];
        r.m2 += m[2];
    }
    return r;
}

}  // namespace

bool has_finite_frequency_variance(const PiecewisePoly& f, double tol) {
    if (f.is_zero()) return true;
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (!detail::negligible(interior_jump(f, i), tol)) return false;
    }
    return detail::negligible(f.pieces().front()(f.lo()), tol) && detail::negligible(f.pieces().back()(f.hi()), tol);
}

Rational norm_sq(const PiecewisePoly& f) {
    require_nonzero(f);
    return moment(f, 0, Power::squared);
}

Rational alpha(const PiecewisePoly& f) {
    require_nonzero(f);
    return moment(f, 1, Power::squared) / moment(f, 0, Power::squared);
}

Rational sigma_x2(const PiecewisePoly& f) {
    require_nonzero(f);
    const RawMoments r = raw_moments(f);
    const Rational mean = r.m1 / r.m0;
    return r.m2 / r.m0 - mean * mean;
}

ExtReal sigma_w2(const PiecewisePoly& f, double tol) {
    require_nonzero(f);
    if (!has_finite_frequency_variance(f, tol)) return ExtReal::infinity();
    return moment(derivative(f, tol), 0, Power::squared) / moment(f, 0, Power::squared);
}

ExtReal uncertainty(const PiecewisePoly& f, double tol) { return ExtReal(sigma_x2(f)) * sigma_w2(f, tol); }

MomentsReport moments(const PiecewisePoly& f, double tol) {
    require_nonzero(f);
    const RawMoments r = raw_moments(f);
    MomentsReport out;
    out.norm_sq = r.m0;
    out.alpha = r.m1 / r.m0;
    out.sigma_x2 = r.m2 / r.m0 - out.alpha * out.alpha;
    out.sigma_w2 = sigma_w2(f, tol);
    out.uncertainty = ExtReal(out.sigma_x2) * out.sigma_w2;
    return out;
}

MomentsReport atom_moments(const PiecewisePoly& envelope, const AtomParams& gamma, double tol) {
    if (gamma.t.sign() <= 0) throw std::invalid_argument("atom scale t must be positive");
    const MomentsReport env = moments(envelope, tol);
    const Rational t2 = gamma.t * gamma.t;
    MomentsReport out;
    out.norm_sq = gamma.t * env.norm_sq;
    out.alpha = gamma.u + gamma.t * env.alpha;
    out.beta_coeff = gamma.xi + env.beta_coeff;
    out.sigma_x2 = t2 * env.sigma_x2;
    out.sigma_w2 = env.sigma_w2.is_finite() ? ExtReal(env.sigma_w2.value() / t2) : ExtReal::infinity();
    out.uncertainty = ExtReal(out.sigma_x2) * out.sigma_w2;
    return out;
}

}  // namespace uncert
