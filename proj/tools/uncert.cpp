// uncert: exact uncertainty products of piecewise-polynomial windows.

#include "uncert/commands.hpp"
#include "uncert/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

uncert::OutputFormat parse_format(const std::string& s) {
    return s == "json" ? uncert::OutputFormat::json : uncert::OutputFormat::csv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact time-frequency uncertainty products of piecewise-polynomial windows"};
    app.require_subcommand(1);

    std::string input = "-";
    double class_tol = 0.0;

    auto* moments = app.add_subcommand("moments", "Moments and uncertainty product of a function descriptor");
    std::string t, xi, u;
    moments->add_option("input", input, "Descriptor JSON file, or - for stdin")->capture_default_str();
    moments->add_option("--t", t, "Atom scale (rational)");
    moments->add_option("--xi", xi, "Atom modulation frequency (rational)");
    moments->add_option("--u", u, "Atom translation (rational)");
    moments->add_option("--class-tol", class_tol, "Tolerance for jumps, boundary values and nonnegativity")
        ->check(CLI::NonNegativeNumber);

    auto* dict = app.add_subcommand("dict-table", "Closed-form dictionary table, checked against the moments");
    std::string family = "G";
    int n_max = 10;
    std::string format = "csv";
    dict->add_option("--family", family, "G or F")->capture_default_str();
    dict->add_option("--n-max", n_max, "Largest n")->capture_default_str()->check(CLI::PositiveNumber);
    dict->add_option("--format", format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

    auto* scan = app.add_subcommand("rect-scan", "Uncertainty products of rect^p");
    int p_min = 2;
    int p_max = 16;
    bool limit = false;
    scan->add_option("--p-min", p_min)->capture_default_str();
    scan->add_option("--p-max", p_max)->capture_default_str();
    scan->add_flag("--limit-check", limit, "Also check monotone decrease towards 1/4 (needs --p-min 2)");
    scan->add_option("--format", format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

    auto* sym = app.add_subcommand("symmetry-check", "Reflections, derivative split and the even-minimizer bounds");
    std::string axis = "barycenter";
    bool no_centering = false;
    sym->add_option("input", input, "Descriptor JSON file, or - for stdin")->capture_default_str();
    sym->add_option("--axis", axis)->capture_default_str()->check(CLI::IsMember({"origin", "barycenter"}));
    sym->add_flag("--no-centering", no_centering,
                  "Reflect about the origin without centering (reproduces the uncentered counterexample)");
    sym->add_option("--class-tol", class_tol)->check(CLI::NonNegativeNumber);

    auto* spec = app.add_subcommand("spectrum-sample", "Sample the Fourier transform on a uniform grid (CSV)");
    double w_min = -20.0;
    double w_max = 20.0;
    int count = 401;
    spec->add_option("input", input, "Descriptor JSON file, or - for stdin")->capture_default_str();
    spec->add_option("--omega-min", w_min)->capture_default_str();
    spec->add_option("--omega-max", w_max)->capture_default_str();
    spec->add_option("--count", count)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the reproduction suite");
    uncert::VerifyOptions vopts;
    verify->add_option("--filter", vopts.filter, "Only checks whose group (or claim) contains this");
    verify->add_option("--criterion", vopts.criterion, "Only this acceptance criterion (1-6)")
        ->check(CLI::Range(1, 6));
    verify->add_option("--inject-fault", vopts.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*moments) {
            std::optional<uncert::AtomParams> gamma;
            if (!t.empty() || !xi.empty() || !u.empty()) {
                uncert::AtomParams g;
                if (!t.empty()) g.t = uncert::Rational::parse(t);
                if (!xi.empty()) g.xi = uncert::Rational::parse(xi);
                if (!u.empty()) g.u = uncert::Rational::parse(u);
                gamma = g;
            }
            return uncert::cmd_moments(read_input(input), gamma, class_tol, std::cout);
        }
        if (*dict) return uncert::cmd_dict_table(uncert::parse_family(family), n_max, parse_format(format), std::cout);
        if (*scan) return uncert::cmd_rect_scan(p_min, p_max, limit, parse_format(format), std::cout, std::cerr);
        if (*sym) {
            uncert::SymmetryOptions o;
            o.axis = uncert::parse_axis(axis);
            o.centering = !no_centering;
            o.class_tol = class_tol;
            return uncert::cmd_symmetry_check(read_input(input), o, std::cout);
        }
        if (*spec) return uncert::cmd_spectrum_sample(read_input(input), w_min, w_max, count, std::cout);
        if (*verify) {
            vopts.seed = uncert::property_seed();
            return uncert::cmd_verify(vopts, std::cout);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
