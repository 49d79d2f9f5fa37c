#include "uncert/commands.hpp"

#include "uncert/bspline.hpp"
#include "uncert/io.hpp"
#include "uncert/spectrum.hpp"

#include <iomanip>
#include <numbers>

namespace uncert {

using nlohmann::ordered_json;

int cmd_moments(const std::string& descriptor, const std::optional<AtomParams>& gamma, double class_tol,
                std::ostream& out) {
    const PiecewisePoly f = parse_descriptor(descriptor);
    if (f.is_zero()) throw std::invalid_argument("the zero function has no moments");
    const MomentsReport m = gamma ? atom_moments(f, *gamma, class_tol) : moments(f, class_tol);
    out << moments_json(m, classify(f, class_tol), gamma).dump(2) << "\n";
    return 0;
}

int cmd_dict_table(Family family, int n_max, OutputFormat format, std::ostream& out) {
    const std::vector<DictRow> rows = dict_table(family, n_max);
    if (format == OutputFormat::csv) {
        out << dict_csv(rows);
        return 0;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["family"] = to_string(r.id.family);
        row["n"] = r.id.n;
        put_exact(row, "sigma_x2", r.sigma_x2);
        put_exact(row, "sigma_w2", r.sigma_w2);
        put_exact(row, "U", r.uncertainty);
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << "\n";
    return 0;
}

namespace {

ordered_json claims_json(const ClaimReport& report) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : report.claims) {
        ordered_json j;
        j["claim"] = c.name;
        j["ok"] = c.ok;
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace

int cmd_rect_scan(int p_min, int p_max, bool with_limit, OutputFormat format, std::ostream& out,
                  std::ostream& diag) {
    std::optional<ClaimReport> claims;
    std::vector<ScanRow> rows;
    if (with_limit) {
        if (p_min != 2) throw std::invalid_argument("--limit-check needs --p-min 2");
        rows = rect_scan(2, p_max);
        claims = limit_check(rows);
    } else {
        rows = rect_scan(p_min, p_max);
    }

    if (format == OutputFormat::csv) {
        out << scan_csv(rows);
        if (claims) {
            for (const auto& c : claims->claims) diag << (c.ok ? "ok    " : "FAIL  ") << c.name << "\n";
        }
    } else {
        ordered_json doc;
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["p"] = r.p;
            put_exact(row, "u_p", r.u_p);
            put_exact(row, "nu_p", r.nu_p);
            put_exact(row, "U", r.uncertainty);
            arr.push_back(std::move(row));
        }
        doc["rows"] = std::move(arr);
        if (claims) doc["limit_check"] = claims_json(*claims);
        out << doc.dump(2) << "\n";
    }
    return claims && !claims->ok() ? 1 : 0;
}

namespace {

ordered_json half_json(const PiecewisePoly& h, double tol) {
    ordered_json j;
    if (h.is_zero()) {
        j["empty"] = true;
        return j;
    }
    put_exact(j, "norm_sq", norm_sq(h));
    put_exact(j, "sigma_x2", sigma_x2(h));
    put_exact(j, "sigma_w2", sigma_w2(h, tol));
    put_exact(j, "U", uncertainty(h, tol));
    j["descriptor"] = descriptor_json(h);
    return j;
}

}  // namespace

int cmd_symmetry_check(const std::string& descriptor, const SymmetryOptions& opts, std::ostream& out) {
    const PiecewisePoly f = parse_descriptor(descriptor);
    if (f.is_zero()) throw std::invalid_argument("the zero function has no reflections");
    const double tol = opts.class_tol;
    const Axis axis = opts.centering ? opts.axis : Axis::origin;

    ordered_json doc;
    doc["axis"] = to_string(axis);
    doc["centered"] = opts.centering;
    doc["class"] = to_string(classify(f, tol).cls);
    put_exact(doc, "alpha", alpha(f));
    put_exact(doc, "U", uncertainty(f, tol));

    const ReflectionPair pair = reflections(f, axis);
    put_exact(doc, "reflection_axis", pair.axis);
    put_exact(doc, "w", pair.w);
    doc["f_s"] = half_json(pair.f_s, tol);
    doc["f_d"] = half_json(pair.f_d, tol);

    if (f.lo() == -f.hi()) {
        try {
            const SplitReport s = even_odd_split(f, tol);
            ordered_json j;
            put_exact(j, "u_even_norm_sq", s.u_even_norm_sq);
            put_exact(j, "u_odd_norm_sq", s.u_odd_norm_sq);
            put_exact(j, "cross_coefficient", s.cross_term_exact);
            j["cross_term_float"] = float_json(2.0 * std::numbers::pi * s.cross_term_exact.to_double());
            j["cross_term_quad"] = float_json(s.cross_term_quad);
            j["cross_term_quad_error"] = float_json(s.cross_term_quad_error);
            doc["split"] = std::move(j);
        } catch (const std::exception& e) {
            doc["split"] = {{"skipped", e.what()}};
        }
    }

    int code = 0;
    try {
        const BoundReport b = theorem_bound_check(f, opts.centering, tol);
        ordered_json j;
        j["cs_rhs"] = float_json(b.cs_rhs);
        j["claims"] = claims_json(b.claims);
        if (!b.note.empty()) j["note"] = b.note;
        doc["bound"] = std::move(j);
        if (!b.claims.ok()) code = 1;
    } catch (const std::invalid_argument& e) {
        doc["bound"] = {{"error", e.what()}};
        code = 1;
    }

    if (axis == Axis::barycenter) {
        const NormalizedPair n = corollary_normalize(pair, Rational(1), tol);
        ordered_json j;
        if (n.u_s) put_exact(j, "U_psi_s", *n.u_s);
        if (n.u_d) put_exact(j, "U_psi_d", *n.u_d);
        j["claims"] = claims_json(n.claims);
        doc["normalized"] = std::move(j);
        if (!n.claims.ok()) code = 1;
    }
    out << doc.dump(2) << "\n";
    return code;
}

int cmd_spectrum_sample(const std::string& descriptor, double omega_min, double omega_max, int count,
                        std::ostream& out) {
    if (count < 1) throw std::invalid_argument("--count must be at least 1");
    if (!(omega_max >= omega_min)) throw std::invalid_argument("--omega-max must be >= --omega-min");
    const PiecewisePoly f = parse_descriptor(descriptor);
    const FourierTransform ft(f);
    std::vector<SpectrumSample> samples;
    for (int i = 0; i < count; ++i) {
        const double w = count == 1 ? omega_min : omega_min + (omega_max - omega_min) * i / (count - 1);
        const auto v = ft(w);
        samples.push_back({w, v.real(), v.imag()});
    }
    out << spectrum_csv(samples);
    return 0;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
    const std::vector<CheckResult> results = run_checks(opts);
    if (results.empty()) throw std::invalid_argument("no check matches filter '" + opts.filter + "'");
    int failed = 0;
    out << "criterion | claim | expected | got | status\n";
    for (const auto& r : results) {
        out << "c" << r.criterion << " | " << r.claim << " | " << r.expected << " | " << r.got << " | "
            << (r.ok ? "PASS" : "FAIL") << "\n";
        if (!r.ok) ++failed;
    }
    out << results.size() - failed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace uncert
