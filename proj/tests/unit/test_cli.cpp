#include "uncert/commands.hpp"
#include "uncert/io.hpp"
#include "uncert/reference.hpp"

#include <doctest.h>

#include <sstream>

using namespace uncert;

namespace {

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

nlohmann::json run_moments(const PiecewisePoly& f, const std::optional<AtomParams>& gamma = std::nullopt) {
    std::ostringstream out;
    REQUIRE(cmd_moments(to_descriptor(f), gamma, 0.0, out) == 0);
    return nlohmann::json::parse(out.str());
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("moments command") {
    const auto t = run_moments(tent());
    CHECK(t["U"] == "3/10");
    CHECK(t["U_float"].get<double>() == 0.3);
    CHECK(t["class"] == "P_plus_zero");
    const auto r = run_moments(unit_rect());
    CHECK(r["sigma_w2"] == "inf");
    CHECK(r["U"] == "inf");
    const auto a = run_moments(tent(), AtomParams{Rational(2), Rational(1), Rational(5)});
    CHECK(a["alpha"] == "5");
    CHECK(a["beta_coeff"] == "1");
    CHECK(a["U"] == "3/10");
    std::ostringstream sink;
    CHECK_THROWS_AS(cmd_moments(R"({"breakpoints": [], "pieces": []})", std::nullopt, 0.0, sink),
                    std::invalid_argument);
}

TEST_CASE("dict-table command") {
    std::ostringstream csv;
    CHECK(cmd_dict_table(Family::F, 3, OutputFormat::csv, csv) == 0);
    CHECK(contains(csv.str(), "F,1,1/10,3,3/10,0.3\n"));
    std::ostringstream js;
    CHECK(cmd_dict_table(Family::G, 2, OutputFormat::json, js) == 0);
    const auto rows = nlohmann::json::parse(js.str());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["U"] == "3/10");
    CHECK(rows[1]["sigma_w2"] == "20/3");
}

TEST_CASE("rect-scan command") {
    std::ostringstream out, diag;
    CHECK(cmd_rect_scan(2, 12, true, OutputFormat::json, out, diag) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["rows"].size() == 11);
    CHECK(doc["rows"][1]["U"] == "215/847");
    for (const auto& c : doc["limit_check"]) CHECK(c["ok"] == true);
    std::ostringstream o2, d2;
    CHECK_THROWS_AS(cmd_rect_scan(3, 5, true, OutputFormat::csv, o2, d2), std::invalid_argument);
}

TEST_CASE("symmetry-check command") {
    std::ostringstream out;
    CHECK(cmd_symmetry_check(to_descriptor(tent()), {}, out) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["w"] == "1/2");
    CHECK(doc["axis"] == "barycenter");

    std::ostringstream unc;
    SymmetryOptions opts;
    opts.centering = false;
    opts.class_tol = kReferenceCubicTol;
    CHECK(cmd_symmetry_check(to_descriptor(reference_cubic()), opts, unc) == 1);
    CHECK(contains(unc.str(), "\"note\""));
}

TEST_CASE("spectrum-sample command") {
    std::ostringstream out;
    CHECK(cmd_spectrum_sample(to_descriptor(tent()), 0.0, 2.0, 3, out) == 0);
    CHECK(out.str().rfind("omega,re,im,abs2\n0,1,0,1\n", 0) == 0);
    CHECK_THROWS_AS(cmd_spectrum_sample(to_descriptor(tent()), 1.0, 0.0, 3, out), std::invalid_argument);
}

TEST_CASE("verify with an injected fault reports it and fails") {
    VerifyOptions opts;
    opts.criterion = 1;
    opts.inject_fault = "closed-form";
    std::ostringstream out;
    CHECK(cmd_verify(opts, out) == 1);
    CHECK(contains(out.str(), "| FAIL"));
}

TEST_CASE("verify filter and determinism") {
    VerifyOptions opts;
    opts.filter = "dictionary";
    opts.criterion = 1;
    std::ostringstream a, b;
    CHECK(cmd_verify(opts, a) == 0);
    CHECK(cmd_verify(opts, b) == 0);
    CHECK(a.str() == b.str());
    CHECK(contains(a.str(), "c1 |"));
    CHECK(!contains(a.str(), "c2 |"));
    opts.filter = "no-such-group";
    std::ostringstream c;
    CHECK_THROWS_AS(cmd_verify(opts, c), std::invalid_argument);
}

}  // TEST_SUITE
