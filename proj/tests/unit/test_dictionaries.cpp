#include "uncert/dictionaries.hpp"

#include <doctest.h>

using namespace uncert;

namespace {

Rational q(long n, long d = 1) { return {n, d}; }

}  // namespace

TEST_SUITE("dictionaries") {

TEST_CASE("family names") {
    CHECK(parse_family("g") == Family::G);
    CHECK(parse_family("F") == Family::F);
    CHECK_THROWS_AS((void)parse_family("H"), std::invalid_argument);
    CHECK_THROWS_AS((void)envelope({Family::F, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)envelope({Family::G, -1}), std::invalid_argument);
}

TEST_CASE("closed forms at small n") {
    // values frozen from direct symbolic integration
    CHECK(closed_sigma_x2({Family::G, 1}) == q(1, 10));
    CHECK(closed_sigma_x2({Family::G, 2}) == q(1, 21));
    CHECK(closed_sigma_x2({Family::G, 3}) == q(1, 36));
    CHECK(closed_sigma_w2({Family::G, 1}) == ExtReal(q(3)));
    CHECK(closed_sigma_w2({Family::G, 2}) == ExtReal(q(20, 3)));
    CHECK(closed_sigma_w2({Family::G, 3}) == ExtReal(q(63, 5)));
    CHECK(closed_sigma_x2({Family::F, 1}) == q(1, 10));
    CHECK(closed_sigma_x2({Family::F, 2}) == q(1, 7));
    CHECK(closed_sigma_x2({Family::F, 3}) == q(14, 81));
    CHECK(closed_sigma_w2({Family::F, 1}) == ExtReal(q(3)));
    CHECK(closed_sigma_w2({Family::F, 2}) == ExtReal(q(5, 2)));
    CHECK(closed_sigma_w2({Family::F, 3}) == ExtReal(q(14, 5)));
    CHECK(closed_uncertainty({Family::G, 1}) == ExtReal(q(3, 10)));
    CHECK(closed_uncertainty({Family::F, 1}) == ExtReal(q(3, 10)));
}

TEST_CASE("G_0 is the rect: infinite frequency variance") {
    CHECK(closed_sigma_x2({Family::G, 0}) == q(1, 3));
    CHECK(!closed_sigma_w2({Family::G, 0}).is_finite());
    CHECK(!closed_uncertainty({Family::G, 0}).is_finite());
    CHECK_THROWS_AS((void)dict_table(Family::G, 0), std::invalid_argument);
}

TEST_CASE("n = 100 against the oracle") {
    CHECK(closed_sigma_x2({Family::G, 100}) == q(1, 20503));
    CHECK(closed_sigma_w2({Family::G, 100}) == ExtReal(q(2010000, 199)));
    CHECK(closed_sigma_x2({Family::F, 100}) == q(6767, 20909));
    CHECK(closed_sigma_w2({Family::F, 100}) == ExtReal(q(20301, 398)));
}

TEST_CASE("table rows agree with the closed forms") {
    for (Family fam : {Family::G, Family::F}) {
        const auto rows = dict_table(fam, 12);
        CHECK(rows.size() == 12);
        CHECK(rows.front().id.n == 1);
        for (const auto& r : rows) {
            CHECK(r.sigma_x2 == closed_sigma_x2(r.id));
            CHECK(r.sigma_w2 == closed_sigma_w2(r.id));
            CHECK(r.uncertainty == closed_uncertainty(r.id));
        }
    }
}

TEST_CASE("the minimiser is n = 1 and U exceeds 1/4") {
    CHECK(verify_minimizer(Family::G, 30).ok());
    CHECK(verify_minimizer(Family::F, 30).ok());
    for (int n = 1; n <= 40; ++n) {
        CHECK(closed_uncertainty({Family::G, n}).value() > q(1, 4));
        CHECK(closed_uncertainty({Family::F, n}).value() > q(1, 4));
    }
}

TEST_CASE("envelopes are normalised") {
    for (int n : {1, 2, 7}) {
        for (Family fam : {Family::G, Family::F}) {
            const Envelope e = envelope({fam, n});
            CHECK(e.prefactor_sq * norm_sq(e.shape) == q(1));
        }
    }
}

}  // TEST_SUITE
