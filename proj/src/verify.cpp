#include "uncert/verify.hpp"

#include "uncert/bspline.hpp"
#include "uncert/dictionaries.hpp"
#include "uncert/io.hpp"
#include "uncert/moments.hpp"
#include "uncert/reference.hpp"
#include "uncert/spectrum.hpp"
#include "uncert/symmetry.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <numbers>

namespace uncert {

std::uint64_t property_seed() {
    if (const char* env = std::getenv("UNCERT_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 20240611;
}

PiecewisePoly random_f_plus_zero(std::mt19937_64& rng) {
    const auto rint = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const auto rq = [&](int lo, int hi, int dmax) { return Rational(rint(lo, hi), rint(1, dmax)); };
    for (;;) {
        const int nb = rint(2, 5);
        std::vector<Rational> x{Rational(-rint(0, 6), rint(1, 3))};
        for (int i = 1; i < nb; ++i) x.push_back(x.back() + Rational(rint(1, 4), rint(1, 3)));
        std::vector<Rational> v(static_cast<std::size_t>(nb));
        for (int i = 1; i + 1 < nb; ++i) v[static_cast<std::size_t>(i)] = rq(0, 5, 4);

        std::vector<Polynomial> pieces;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            // Linear interpolation of the knot values plus a bubble vanishing at both knots.
            const Rational s = (v[i + 1] - v[i]) / (x[i + 1] - x[i]);
            const Polynomial line{v[i] - s * x[i], s};
            const Polynomial bubble{-x[i] * x[i + 1], x[i] + x[i + 1], Rational(-1)};
            std::vector<Rational> rc(static_cast<std::size_t>(rint(0, 3)));
            for (auto& c : rc) c = rq(-3, 3, 4);
            pieces.push_back(line + bubble * Polynomial(std::move(rc)));
        }
        PiecewisePoly f(std::move(x), std::move(pieces));
        if (f.is_zero()) continue;
        if (check_nonnegative(f) != Nonnegativity::proven) f = f * f;
        return f;
    }
}

namespace {

std::string fmt(double v) { return format_double(v); }

class Collector {
public:
    Collector(std::vector<CheckResult>& out, int criterion, std::string group)
        : out_(out), criterion_(criterion), group_(std::move(group)) {}

    void claim(const std::string& name, bool ok, std::string expected, std::string got) {
        out_.push_back({criterion_, group_, name, std::move(expected), std::move(got), ok});
    }
    void exact(const std::string& name, const ExtReal& expected, const ExtReal& got) {
        claim(name, expected == got, expected.str(), got.str());
    }
    void near(const std::string& name, double expected, double got, double tol) {
        claim(name, std::abs(expected - got) <= tol, fmt(expected) + " +- " + fmt(tol), fmt(got));
    }
    void near_rel(const std::string& name, double expected, double got, double rel) {
        claim(name, std::abs(expected - got) <= rel * std::abs(expected), fmt(expected) + " (rel " + fmt(rel) + ")",
              fmt(got));
    }
    // Runs body; an exception becomes a failed claim rather than an abort.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            claim(name, false, "no error", std::string("error: ") + e.what());
        }
    }

private:
    std::vector<CheckResult>& out_;
    int criterion_;
    std::string group_;
};

Rational q(long n, long d = 1) { return {n, d}; }

// --- criterion 1 -----------------------------------------------------------

void dictionary_values(std::vector<CheckResult>& out, const VerifyOptions& opts) {
    Collector c(out, 1, "dictionary");
    struct Row {
        Family family;
        int n;
        Rational sx, sw, u;
    };
    const std::vector<Row> rows = {
        {Family::G, 1, q(1, 10), q(3), q(3, 10)},     {Family::G, 2, q(1, 21), q(20, 3), q(20, 63)},
        {Family::G, 3, q(1, 36), q(63, 5), q(7, 20)}, {Family::F, 1, q(1, 10), q(3), q(3, 10)},
        {Family::F, 2, q(1, 7), q(5, 2), q(5, 14)},   {Family::F, 3, q(14, 81), q(14, 5), q(196, 405)},
    };
    for (const auto& r : rows) {
        const DictionaryId id{r.family, r.n};
        const std::string tag = to_string(r.family) + "_" + std::to_string(r.n);
        c.guarded(tag, [&] {
            const MomentsReport m = moments(envelope(id).shape);
            ExtReal closed_u = closed_uncertainty(id);
            if (opts.inject_fault == "closed-form" && r.family == Family::G && r.n == 2) {
                closed_u = closed_u.value() + q(1, 1000);
            }
            c.exact("U(" + tag + ") closed form", r.u, closed_u);
            c.exact("U(" + tag + ") moments pipeline", r.u, m.uncertainty);
            c.exact("sigma_x2(" + tag + ") closed form", r.sx, closed_sigma_x2(id));
            c.exact("sigma_x2(" + tag + ") moments pipeline", r.sx, m.sigma_x2);
            c.exact("sigma_w2(" + tag + ") closed form", r.sw, closed_sigma_w2(id));
            c.exact("sigma_w2(" + tag + ") moments pipeline", r.sw, m.sigma_w2);
        });
    }
}

// --- criterion 2 -----------------------------------------------------------

void dictionary_asymptotes(std::vector<CheckResult>& out) {
    Collector c(out, 2, "dictionary");
    for (const Family fam : {Family::G, Family::F}) {
        const std::string name = to_string(fam);
        c.guarded(name + " minimizer", [&] {
            for (const auto& cl : verify_minimizer(fam, 100).claims) {
                c.claim(name + ": " + cl.name, cl.ok, "holds", cl.detail.empty() ? "holds" : cl.detail);
            }
        });
        c.guarded(name + " pipeline agreement n <= 100", [&] {
            (void)dict_table(fam, 100);
            c.claim(name + ": closed form = moments pipeline for n = 1..100", true, "agree", "agree");
        });
    }
    c.near("U(G_100) near 1/2", 0.5, closed_uncertainty({Family::G, 100}).to_double(), 1e-2);
    c.near("U(F_100) / (100/6) near 1", 1.0, closed_uncertainty({Family::F, 100}).to_double() / (100.0 / 6.0), 0.02);
}

// --- criterion 3 -----------------------------------------------------------

void rect_family(std::vector<CheckResult>& out) {
    Collector c(out, 3, "rect");
    c.guarded("explicit = recursive", [&] {
        int first_bad = 0;
        PiecewisePoly rec = unit_rect();
        for (int p = 1; p <= 64 && first_bad == 0; ++p) {
            if (p > 1) rec = window_integral(rec, q(1, 2));
            if (!(rect_p_explicit(p) == rec)) first_bad = p;
        }
        c.claim("rect_p_explicit = rect_p_recursive for p <= 64", first_bad == 0, "identical",
                first_bad ? "differ at p = " + std::to_string(first_bad) : "identical");
    });
    c.guarded("rect scan", [&] {
        const std::vector<ScanRow> rows = rect_scan(2, 64);
        c.exact("U(rect^2) = 3/10", q(3, 10), rows[0].uncertainty);
        c.exact("U(rect^3) = 215/847", q(215, 847), rows[1].uncertainty);
        for (const auto& cl : limit_check(rows).claims) {
            c.claim(cl.name, cl.ok, "holds", cl.detail.empty() ? "holds" : cl.detail);
        }
        const double excess = (rows.back().uncertainty.value() - q(1, 4)).to_double();
        c.claim("U(rect^64) - 1/4 < 1e-3", excess < 1e-3, "< 0.001", fmt(excess));
    });
}

// --- criterion 4 -----------------------------------------------------------

void symmetry_examples(std::vector<CheckResult>& out) {
    Collector c(out, 4, "symmetry");
    const PiecewisePoly f = reference_cubic();
    const double tol = kReferenceCubicTol;
    c.guarded("reference cubic", [&] {
        c.near("alpha[f]", 0.384209038102, alpha(f).to_double(), 1e-8);
        c.near("U[f]", 0.328205910036, uncertainty(f, tol).to_double(), 1e-8);

        const ReflectionPair origin = reflections(f, Axis::origin);
        c.near("origin U[f_s]", 0.488135390966, uncertainty(origin.f_s, tol).to_double(), 1e-8);
        c.near("origin U[f_d]", 1.064558791510, uncertainty(origin.f_d, tol).to_double(), 1e-8);

        const ReflectionPair bary = reflections(f, Axis::barycenter);
        c.near("barycentric U[f_s]", 0.233608189515, uncertainty(bary.f_s, tol).to_double(), 1e-8);
        c.near("barycentric U[f_d]", 0.365009365360, uncertainty(bary.f_d, tol).to_double(), 1e-8);

        const SplitReport split = even_odd_split(f, tol);
        c.near("||u_even||^2", 0.675886085, split.u_even_norm_sq.to_double(), 1e-6);
        c.near("||u_odd||^2", 0.433013302, split.u_odd_norm_sq.to_double(), 1e-6);
        c.near("cross term 2 pi (||u_odd||^2 - ||u_even||^2)", -1.526014699,
               2.0 * std::numbers::pi * split.cross_term_exact.to_double(), 1e-6);

        const BoundReport uncentered = theorem_bound_check(f, false, tol);
        const BoundReport centered = theorem_bound_check(f, true, tol);
        c.claim("uncentered min-bound fails", !uncentered.claims.claims.front().ok, "fails",
                uncentered.claims.claims.front().ok ? "holds" : "fails");
        c.claim("centered min-bound holds", centered.claims.claims.front().ok, "holds",
                centered.claims.claims.front().ok ? "holds" : "fails");
    });
}

// --- criterion 5 -----------------------------------------------------------

struct CaseOutcome {
    std::string affine, convex, cs, mass, floor;  // empty when the property held
};

CaseOutcome property_case(std::uint64_t seed, int index) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(index) * 0x9E3779B97F4A7C15ULL);
    const PiecewisePoly f = random_f_plus_zero(rng);
    CaseOutcome o;
    const std::string where = "case " + std::to_string(index) + " " + to_descriptor(f);
    try {
        const auto rint = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
        const ExtReal u = uncertainty(f);
        int lam = rint(-4, 4);
        if (lam == 0) lam = 3;
        int gam = rint(-5, 5);
        if (gam == 0) gam = -2;
        const PiecewisePoly g = affine(f, Rational(lam, rint(1, 3)), Rational(gam, rint(1, 4)), Rational(rint(-7, 7), rint(1, 5)));
        if (!(uncertainty(g) == u)) o.affine = where;

        const BoundReport b = theorem_bound_check(f, true);
        for (const auto& cl : b.claims.claims) {
            if (cl.ok) continue;
            if (cl.name.rfind("sigma_", 0) == 0) o.convex = where + ": " + cl.name;
            else if (cl.name.rfind("cs-bound", 0) == 0) o.cs = where;
            else if (cl.name.rfind("mass", 0) == 0) o.mass = where;
        }
        if (u.is_finite() && !(u.value() > q(1, 4))) o.floor = where + " U = " + u.str();
    } catch (const std::exception& e) {
        o.affine = o.convex = o.cs = o.mass = o.floor = where + " error: " + e.what();
    }
    return o;
}

void property_suites(std::vector<CheckResult>& out, const VerifyOptions& opts) {
    Collector c(out, 5, "property");
    std::vector<std::future<CaseOutcome>> jobs;
    for (int i = 0; i < opts.cases; ++i) jobs.push_back(std::async(std::launch::async, property_case, opts.seed, i));
    std::vector<CaseOutcome> results;
    for (auto& j : jobs) results.push_back(j.get());

    const auto summarize = [&](const std::string& name, std::string CaseOutcome::*field) {
        int bad = 0;
        std::string first;
        for (const auto& r : results) {
            if ((r.*field).empty()) continue;
            if (bad++ == 0) first = r.*field;
        }
        const std::string expected = "all " + std::to_string(opts.cases) + " cases (seed " + std::to_string(opts.seed) + ")";
        c.claim(name, bad == 0, expected, bad == 0 ? "all hold" : std::to_string(bad) + " failed; first: " + first);
    };
    summarize("affine and scalar invariance of U (exact)", &CaseOutcome::affine);
    summarize("centered convex decompositions of sigma_x2 and sigma_w2 (exact)", &CaseOutcome::convex);
    summarize("weighted Cauchy-Schwarz bound (slack 1e-12)", &CaseOutcome::cs);
    summarize("mass identity ||f_s||^2 + ||f_d||^2 = 2 ||f||^2 (exact)", &CaseOutcome::mass);
    summarize("Heisenberg floor U > 1/4", &CaseOutcome::floor);
}

// --- criterion 6 -----------------------------------------------------------

void spectral_oracles(std::vector<CheckResult>& out) {
    Collector c(out, 6, "spectrum");
    const double rel = 1e-6;

    struct Named {
        std::string name;
        PiecewisePoly f;
    };
    const std::vector<Named> fns = {{"tent", tent()},
                                    {"rect^3", rect_p_explicit(3)},
                                    {"rect^4", rect_p_explicit(4)},
                                    {"g_2", envelope({Family::G, 2}).shape},
                                    {"f_2", envelope({Family::F, 2}).shape}};
    for (const auto& [name, f] : fns) {
        c.guarded("quadrature " + name, [&] {
            const double n0 = norm_sq(f).to_double();
            const double n2 = moment(derivative(f), 0, Power::squared).to_double();
            c.near_rel("quad k=0 " + name + " = ||f||^2", n0, quad_freq_moment(f, 0, rel * 0.1).value, rel);
            c.near_rel("quad k=2 " + name + " = ||f'||^2", n2, quad_freq_moment(f, 2, rel * 0.1).value, rel);
        });
    }

    // 100-point grid, symmetric, including |w| < 1e-4.
    std::vector<double> grid;
    for (int i = 0; i < 80; ++i) grid.push_back(-60.0 + 1.5 * i + 0.013 * i);
    for (int i = 0; i < 20; ++i) grid.push_back((i - 10) * 9.7e-6);
    for (int p = 1; p <= 3; ++p) {
        const FourierTransform ft(rect_p_explicit(p));
        double worst = 0.0;
        for (const double w : grid) {
            const double s = std::abs(w) < 1e-8 ? 1.0 - w * w / 24.0 : std::sin(w / 2.0) / (w / 2.0);
            const auto v = ft(w);
            worst = std::max(worst, std::abs(v - std::complex<double>(std::pow(s, p), 0.0)));
        }
        c.claim("fourier_eval(rect^" + std::to_string(p) + ") = sinc^" + std::to_string(p) + " on 100 points", worst <= 1e-10,
                "max error <= 1e-10", fmt(worst));
    }

    for (int n = 1; n <= 5; ++n) {
        c.guarded("F_n squared", [&] {
            const double expected = std::numbers::pi / (2 * n + 1);
            c.near_rel("int F_" + std::to_string(n) + "^2 = pi/" + std::to_string(2 * n + 1), expected,
                       integrate_F_n_squared(n, 1e-8).value, rel);
        });
    }

    c.guarded("atom frequency mean", [&] {
        const AtomParams gamma{q(2), q(3), q(1)};
        const QuadratureResult r = atom_frequency_mean(envelope({Family::G, 1}).shape, gamma, 1e-8);
        c.near("atom g_1 (t=2, xi=3, u=1) frequency mean = 2 pi 3", 6.0 * std::numbers::pi, r.value, 1e-6);
    });
}

struct Group {
    int criterion;
    std::string name;
    std::function<void(std::vector<CheckResult>&, const VerifyOptions&)> run;
};

}  // namespace

std::vector<CheckResult> run_checks(const VerifyOptions& opts) {
    const std::vector<Group> groups = {
        {1, "dictionary", dictionary_values},
        {2, "dictionary", [](auto& out, const auto&) { dictionary_asymptotes(out); }},
        {3, "rect", [](auto& out, const auto&) { rect_family(out); }},
        {4, "symmetry", [](auto& out, const auto&) { symmetry_examples(out); }},
        {5, "property", property_suites},
        {6, "spectrum", [](auto& out, const auto&) { spectral_oracles(out); }},
    };
    bool group_match = opts.filter.empty();
    for (const auto& g : groups) {
        if (!opts.filter.empty() && g.name.find(opts.filter) != std::string::npos) group_match = true;
    }

    std::vector<CheckResult> out;
    for (const auto& g : groups) {
        if (opts.criterion != 0 && g.criterion != opts.criterion) continue;
        if (group_match && !opts.filter.empty() && g.name.find(opts.filter) == std::string::npos) continue;
        std::vector<CheckResult> part;
        g.run(part, opts);
        for (auto& r : part) {
            if (!group_match && r.claim.find(opts.filter) == std::string::npos) continue;
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace uncert
