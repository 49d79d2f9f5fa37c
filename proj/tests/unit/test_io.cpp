#include "generators.hpp"
#include "uncert/io.hpp"
#include "uncert/reference.hpp"

#include <doctest.h>

#include <limits>

using namespace uncert;

namespace {

std::string error_of(std::string_view text) {
    try {
        (void)parse_descriptor(text);
    } catch (const DescriptorError& e) {
        return e.what();
    }
    return {};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_SUITE("io") {

TEST_CASE("descriptor parsing") {
    const PiecewisePoly f = parse_descriptor(R"({"name": "tent", "breakpoints": ["-1", 0, "1"],
                                                 "pieces": [["1", "1"], [1, "-1"]]})");
    CHECK(f == tent());
    CHECK(parse_descriptor(R"({"breakpoints": ["0", "1/3"], "pieces": [["0.25"]]})") ==
          PiecewisePoly::indicator(Rational(0), Rational(1, 3), Rational(1, 4)));
    CHECK(parse_descriptor(R"({"breakpoints": [], "pieces": []})").is_zero());
}

TEST_CASE("descriptor round trip") {
    auto g = testgen::rng(50);
    for (int i = 0; i < 30; ++i) {
        const PiecewisePoly f = testgen::piecewise(g);
        CHECK(parse_descriptor(to_descriptor(f)) == f);
    }
    CHECK(parse_descriptor(to_descriptor(reference_cubic())) == reference_cubic());
}

TEST_CASE("descriptor errors name the problem") {
    CHECK(contains(error_of("{\"breakpoints\": [\n  1,,]}"), "line 2"));
    CHECK(contains(error_of(R"({"breakpoints": ["0", "1"], "pieces": [[0.5]]})"), "pieces[0][0]"));
    CHECK(contains(error_of(R"({"breakpoints": ["0", "1"], "pieces": [[0.5]]})"), "floating-point"));
    CHECK(contains(error_of(R"({"breakpoints": ["0", "1", "2"], "pieces": [["1"], ["x"]]})"), "pieces[1][0]"));
    CHECK(contains(error_of(R"({"breakpoints": ["1", "0"], "pieces": [["1"]]})"), "breakpoints[1]"));
    CHECK(contains(error_of(R"({"breakpoints": ["0", "1"], "pieces": []})"), "pieces"));
    CHECK(contains(error_of(R"({"breakpoints": ["0", "1"], "pieces": [["1"]], "degree": 2})"), "unknown key"));
    CHECK(contains(error_of(R"({"pieces": []})"), "breakpoints"));
    CHECK(contains(error_of("[1, 2]"), "JSON object"));
}

TEST_CASE("float formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(0.3) == "0.3");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(float_json(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(float_json(0.25).get<double>() == 0.25);
}

TEST_CASE("exact values carry a float companion") {
    nlohmann::ordered_json j;
    put_exact(j, "U", ExtReal(Rational(3, 10)));
    put_exact(j, "W", ExtReal::infinity());
    CHECK(j["U"] == "3/10");
    CHECK(j["U_float"].get<double>() == 0.3);
    CHECK(j["W"] == "inf");
    CHECK(j["W_float"] == "inf");
}

TEST_CASE("csv headers") {
    CHECK(spectrum_csv({{0.0, 1.0, 0.0}}) == "omega,re,im,abs2\n0,1,0,1\n");
    CHECK(dict_csv({}).rfind("family,n,sigma_x2,sigma_w2,U,U_float\n", 0) == 0);
    CHECK(scan_csv({}) == "p,u_p,nu_p,U,U_float\n");
}

}  // TEST_SUITE
