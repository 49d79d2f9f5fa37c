#include "uncert/io.hpp"

#include <charconv>
#include <cmath>

namespace uncert {

using nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void field_error(const std::string& field, const std::string& msg) {
    throw DescriptorError("descriptor field '" + field + "': " + msg);
}

Rational rational_field(const nlohmann::json& v, const std::string& field) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            field_error(field, e.what());
        }
    }
    if (v.is_number_integer()) return Rational(mpz_class(v.dump()));
    if (v.is_number_float()) field_error(field, "floating-point numbers are inexact; write the value as a string");
    field_error(field, "expected a rational string, got " + std::string(v.type_name()));
}

const nlohmann::json& array_field(const nlohmann::json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) field_error(key, "missing");
    if (!it->is_array()) field_error(key, "expected an array, got " + std::string(it->type_name()));
    return *it;
}

}  // namespace

PiecewisePoly parse_descriptor(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw DescriptorError("descriptor is not valid JSON (line " + std::to_string(line) + ", column " +
                              std::to_string(col) + "): " + e.what());
    }
    if (!doc.is_object()) throw DescriptorError("descriptor must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "breakpoints" && key != "pieces" && key != "name") field_error(key, "unknown key");
    }

    const auto& jb = array_field(doc, "breakpoints");
    const auto& jp = array_field(doc, "pieces");
    if (jb.empty() && jp.empty()) return {};

    std::vector<Rational> breaks;
    for (std::size_t i = 0; i < jb.size(); ++i) {
        breaks.push_back(rational_field(jb[i], "breakpoints[" + std::to_string(i) + "]"));
    }
    std::vector<Polynomial> pieces;
    for (std::size_t i = 0; i < jp.size(); ++i) {
        const std::string name = "pieces[" + std::to_string(i) + "]";
        if (!jp[i].is_array()) field_error(name, "expected an array of coefficients");
        std::vector<Rational> coeffs;
        for (std::size_t j = 0; j < jp[i].size(); ++j) {
            coeffs.push_back(rational_field(jp[i][j], name + "[" + std::to_string(j) + "]"));
        }
        pieces.emplace_back(std::move(coeffs));
    }
    if (breaks.size() != pieces.size() + 1) {
        field_error("pieces", "expected " + std::to_string(breaks.size() > 0 ? breaks.size() - 1 : 0) +
                                  " pieces for " + std::to_string(breaks.size()) + " breakpoints, got " +
                                  std::to_string(pieces.size()));
    }
    for (std::size_t i = 1; i < breaks.size(); ++i) {
        if (!(breaks[i - 1] < breaks[i])) {
            field_error("breakpoints[" + std::to_string(i) + "]", "breakpoints must be strictly increasing");
        }
    }
    return {std::move(breaks), std::move(pieces)};
}

ordered_json descriptor_json(const PiecewisePoly& f) {
    ordered_json out;
    out["breakpoints"] = ordered_json::array();
    out["pieces"] = ordered_json::array();
    for (const auto& b : f.breakpoints()) out["breakpoints"].push_back(b.str());
    for (const auto& p : f.pieces()) {
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
        out["pieces"].push_back(std::move(coeffs));
    }
    return out;
}

std::string to_descriptor(const PiecewisePoly& f) { return descriptor_json(f).dump(); }

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

ordered_json float_json(double v) {
    if (std::isinf(v) || std::isnan(v)) return format_double(v);
    return v;
}

void put_exact(ordered_json& obj, const std::string& key, const Rational& v) {
    obj[key] = v.str();
    obj[key + "_float"] = float_json(v.to_double());
}

void put_exact(ordered_json& obj, const std::string& key, const ExtReal& v) {
    obj[key] = v.str();
    obj[key + "_float"] = float_json(v.to_double());
}

ordered_json moments_json(const MomentsReport& m, const ClassTag& tag, const std::optional<AtomParams>& gamma) {
    ordered_json out;
    out["class"] = to_string(tag.cls);
    out["nonnegativity"] = to_string(tag.nonnegativity);
    if (gamma) {
        out["gamma"] = {{"t", gamma->t.str()}, {"xi", gamma->xi.str()}, {"u", gamma->u.str()}};
    }
    put_exact(out, "alpha", m.alpha);
    put_exact(out, "beta_coeff", m.beta_coeff);
    put_exact(out, "norm_sq", m.norm_sq);
    put_exact(out, "sigma_x2", m.sigma_x2);
    put_exact(out, "sigma_w2", m.sigma_w2);
    put_exact(out, "U", m.uncertainty);
    return out;
}

std::string dict_csv(const std::vector<DictRow>& rows) {
    std::string out = "family,n,sigma_x2,sigma_w2,U,U_float\n";
    for (const auto& r : rows) {
        out += to_string(r.id.family) + "," + std::to_string(r.id.n) + "," + r.sigma_x2.str() + "," +
               r.sigma_w2.str() + "," + r.uncertainty.str() + "," + format_double(r.uncertainty.to_double()) + "\n";
    }
    return out;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "p,u_p,nu_p,U,U_float\n";
    for (const auto& r : rows) {
        out += std::to_string(r.p) + "," + r.u_p.str() + "," + r.nu_p.str() + "," + r.uncertainty.str() + "," +
               format_double(r.uncertainty_float) + "\n";
    }
    return out;
}

std::string spectrum_csv(const std::vector<SpectrumSample>& samples) {
    std::string out = "omega,re,im,abs2\n";
    for (const auto& s : samples) {
        out += format_double(s.omega) + "," + format_double(s.re) + "," + format_double(s.im) + "," +
               format_double(s.re * s.re + s.im * s.im) + "\n";
    }
    return out;
}

}  // namespace uncert
