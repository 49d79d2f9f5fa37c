#include "uncert/symmetry.hpp"

#include "uncert/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uncert {

std::string to_string(Axis a) { return a == Axis::origin ? "origin" : "barycenter"; }

Axis parse_axis(const std::string& s) {
    if (s == "origin") return Axis::origin;
    if (s == "barycenter") return Axis::barycenter;
    throw std::invalid_argument("unknown axis '" + s + "' (expected origin or barycenter)");
}

namespace {

void require_symmetric_support(const PiecewisePoly& f, const char* what) {
    if (f.is_zero()) throw std::invalid_argument(std::string(what) + ": zero function");
    if (f.lo() != -f.hi()) {
        throw std::invalid_argument(std::string(what) + ": support [" + f.lo().str() + ", " + f.hi().str() +
                                    "] is not symmetric about 0");
    }
}

Rational norm_or_zero(const PiecewisePoly& f) { return f.is_zero() ? Rational(0) : norm_sq(f); }

}  // namespace

ReflectionPair reflections(const PiecewisePoly& f, Axis axis) {
    if (f.is_zero()) throw std::invalid_argument("reflections: zero function");
    ReflectionPair pair;
    if (axis == Axis::origin) {
        require_symmetric_support(f, "reflections about the origin");
        pair.axis = Rational(0);
    } else {
        pair.axis = alpha(f);
    }
    const PiecewisePoly left = restrict(f, f.lo(), pair.axis);
    const PiecewisePoly right = restrict(f, pair.axis, f.hi());
    pair.f_s = left + reflect(left, pair.axis);
    pair.f_d = reflect(right, pair.axis) + right;
    const Rational ns = norm_or_zero(pair.f_s);
    const Rational nd = norm_or_zero(pair.f_d);
    pair.w = nd / (nd + ns);
    return pair;
}

SplitReport even_odd_split(const PiecewisePoly& f, double tol, double rel_tol) {
    require_symmetric_support(f, "even_odd_split");
    const PiecewisePoly u = derivative(f, tol);
    const PiecewisePoly ru = reflect(u, Rational(0));
    const Rational half(1, 2);
    const PiecewisePoly u_even = half * (u + ru);
    const PiecewisePoly u_odd = half * (u - ru);

    SplitReport r;
    r.u_even_norm_sq = u_even.is_zero() ? Rational(0) : moment(u_even, 0, Power::squared);
    r.u_odd_norm_sq = u_odd.is_zero() ? Rational(0) : moment(u_odd, 0, Power::squared);
    r.cross_term_exact = r.u_odd_norm_sq - r.u_even_norm_sq;

    const ReflectionPair pair = reflections(f, Axis::origin);
    if (!pair.f_s.is_zero() && !pair.f_d.is_zero()) {
        const QuadratureResult q = quad_freq_product(pair.f_s, pair.f_d, 2, rel_tol, tol);
        r.cross_term_quad = 2.0 * std::numbers::pi * q.value;
        r.cross_term_quad_error = 2.0 * std::numbers::pi * q.abs_error_estimate;
    }
    return r;
}

namespace {

bool at_least(const ExtReal& a, const ExtReal& b) {
    if (!b.is_finite()) return !a.is_finite();
    if (!a.is_finite()) return true;
    return a.value() >= b.value();
}

const ExtReal& ext_min(const ExtReal& a, const ExtReal& b) { return at_least(a, b) ? b : a; }

}  // namespace

BoundReport theorem_bound_check(const PiecewisePoly& f, bool centering, double tol) {
    if (f.is_zero()) throw std::invalid_argument("theorem_bound_check: zero function");
    const ClassTag tag = classify(f, tol);
    if (tag.cls != FunctionClass::f_plus_zero && tag.cls != FunctionClass::p_plus_zero) {
        throw std::invalid_argument("theorem_bound_check needs a function in F+_0, got class " + to_string(tag.cls));
    }
    if (!has_finite_frequency_variance(f, tol)) {
        throw std::invalid_argument("theorem_bound_check needs a finite frequency variance");
    }

    const ReflectionPair pair = reflections(f, centering ? Axis::barycenter : Axis::origin);
    BoundReport r;
    r.centered = centering;
    r.axis = pair.axis;
    r.w = pair.w;
    r.u_f = uncertainty(f, tol);
    if (!pair.f_s.is_zero()) r.u_s = uncertainty(pair.f_s, tol);
    if (!pair.f_d.is_zero()) r.u_d = uncertainty(pair.f_d, tol);
    if (!centering) {
        r.note = "reflection axis 0 differs from the barycenter " + alpha(f).str() +
                 "; w is the energy fraction of the uncentered pair";
    }

    // Min-bound, exact.
    const ExtReal& lower = r.u_s && r.u_d ? ext_min(*r.u_s, *r.u_d) : (r.u_s ? *r.u_s : *r.u_d);
    r.claims.add("min-bound U[f] >= min(U[f_s], U[f_d])", at_least(r.u_f, lower),
                 "U[f] = " + std::to_string(r.u_f.to_double()) + ", min = " + std::to_string(lower.to_double()));

    // Weighted Cauchy-Schwarz bound in double precision.
    const double w = r.w.to_double();
    const double sd = r.u_d ? std::sqrt(r.u_d->to_double()) : 0.0;
    const double ss = r.u_s ? std::sqrt(r.u_s->to_double()) : 0.0;
    r.cs_rhs = std::pow(w * sd + (1.0 - w) * ss, 2);
    r.claims.add("cs-bound U[f] >= (w sqrt(U[f_d]) + (1-w) sqrt(U[f_s]))^2", r.u_f.to_double() >= r.cs_rhs - 1e-12,
                 "rhs = " + std::to_string(r.cs_rhs));

    const Rational nf = norm_sq(f);
    const Rational ns = norm_or_zero(pair.f_s);
    const Rational nd = norm_or_zero(pair.f_d);
    r.claims.add("mass identity ||f_s||^2 + ||f_d||^2 = 2 ||f||^2", ns + nd == Rational(2) * nf);

    const Rational one(1);
    Rational sx;
    bool sw_finite = true;
    Rational sw_sum;
    if (!pair.f_d.is_zero()) {
        sx += r.w * sigma_x2(pair.f_d);
        const ExtReal v = sigma_w2(pair.f_d, tol);
        if (v.is_finite()) sw_sum += r.w * v.value(); else sw_finite = false;
    }
    if (!pair.f_s.is_zero()) {
        sx += (one - r.w) * sigma_x2(pair.f_s);
        const ExtReal v = sigma_w2(pair.f_s, tol);
        if (v.is_finite()) sw_sum += (one - r.w) * v.value(); else sw_finite = false;
    }
    const Rational fx = sigma_x2(f);
    r.claims.add("sigma_x2[f] = w sigma_x2[f_d] + (1-w) sigma_x2[f_s]", sx == fx,
                 sx == fx ? std::string{} : "difference " + std::to_string((fx - sx).to_double()));
    const ExtReal fw = sigma_w2(f, tol);
    const bool sw_ok = sw_finite && fw.is_finite() && sw_sum == fw.value();
    r.claims.add("sigma_w2[f] = w sigma_w2[f_d] + (1-w) sigma_w2[f_s]", sw_ok);
    return r;
}

NormalizedPair corollary_normalize(const ReflectionPair& pair, const Rational& a, double tol) {
    if (a.sign() <= 0) throw std::invalid_argument("corollary_normalize needs a > 0");
    NormalizedPair out;
    const auto normalize = [&](const PiecewisePoly& fi, const char* name, std::optional<PiecewisePoly>& psi,
                               std::optional<ExtReal>& u) {
        if (fi.is_zero()) return;
        const Rational r = (fi.hi() - fi.lo()) / Rational(2);
        PiecewisePoly p = affine(fi, Rational(1), r / a, -pair.axis);
        const ExtReal u_fi = uncertainty(fi, tol);
        const ExtReal u_psi = uncertainty(p, tol);
        const std::string n(name);
        out.claims.add("U[psi_" + n + "] = U[f_" + n + "]", u_psi == u_fi, u_psi.str() + " vs " + u_fi.str());
        out.claims.add("psi_" + n + " supported on [-a, a]", p.lo() == -a && p.hi() == a);
        const FunctionClass cls = classify(p, tol).cls;
        out.claims.add("psi_" + n + " in P+_0", cls == FunctionClass::p_plus_zero, to_string(cls));
        psi = std::move(p);
        u = u_psi;
    };
    normalize(pair.f_s, "s", out.psi_s, out.u_s);
    normalize(pair.f_d, "d", out.psi_d, out.u_d);
    return out;
}

}  // namespace uncert
