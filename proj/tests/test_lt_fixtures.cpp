#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/json_io.hpp"
#include "witt/lt_fixtures.hpp"
#include "witt/rng.hpp"

using namespace witt;

TEST_CASE("lengths of the shipped height-2 presentations") {
    auto fx = builtin_height2_fixtures();
    REQUIRE(fx.size() == 3);
    CHECK(length_over_fp(fx[0]) == 1);
    CHECK(length_over_fp(fx[1]) == 4);
    CHECK(length_over_fp(fx[2]) == 11);
}

TEST_CASE("mod-p reductions of the shipped presentations") {
    auto fx = builtin_height2_fixtures();
    CHECK(mod_p_reduction(fx[0]) == 1);
    CHECK(mod_p_reduction(fx[1]) == 3);
    CHECK(mod_p_reduction(fx[2]) == 7);
}

TEST_CASE("full suite against the subgroup-count series") {
    FixtureReport rep = verify_height2_suite();
    CHECK(rep.pass());
    REQUIRE(rep.checks.size() == 3);
    CHECK(rep.checks[0].length == 1);
    CHECK(rep.checks[1].length == 4);
    CHECK(rep.checks[2].length == 11);
    CHECK(rep.checks[0].mod_p_exponent == 1);
    CHECK(rep.checks[1].mod_p_exponent == 3);
    CHECK(rep.checks[2].mod_p_exponent == 7);
    Json j = fixture_report_to_json(rep);
    CHECK(j["status"] == "pass");
    CHECK(j["lengths"] == Json::array({1, 4, 11}));
    CHECK(j["mod_p_exponents"] == Json::array({1, 3, 7}));
}

TEST_CASE("negative control: tampered relation is caught") {
    auto fx = builtin_height2_fixtures();
    // replace a^3 - 2 by a^2 - 2 (degree bound follows the new top)
    fx[1].relations[2] = {mpz_class(-2), mpz_class(0), mpz_class(1)};
    fx[1].degree_bound = 2;
    CHECK(length_over_fp(fx[1]) == 3); // no longer 4
    FixtureReport rep = verify_height2_suite(fx);
    CHECK(!rep.pass());
    bool mentions_length = false;
    for (const auto& f : rep.failures)
        if (f.find("length") != std::string::npos) mentions_length = true;
    CHECK(mentions_length);
}

TEST_CASE("degenerate presentations") {
    QuotientPresentation empty;
    empty.p = 2;
    empty.modulus_exponent = 1;
    empty.degree_bound = 1;
    CHECK_THROWS_AS(length_over_fp(empty), non_terminating_reduction);

    // no monic top relation
    QuotientPresentation no_top;
    no_top.p = 2;
    no_top.modulus_exponent = 1;
    no_top.degree_bound = 2;
    no_top.relations = {{2}, {0, 2}};
    CHECK_THROWS_AS(length_over_fp(no_top), non_terminating_reduction);

    // missing coefficient modulus
    QuotientPresentation no_mod;
    no_mod.p = 2;
    no_mod.modulus_exponent = 2;
    no_mod.degree_bound = 1;
    no_mod.relations = {{0, 1}};
    CHECK_THROWS_AS(length_over_fp(no_mod), invalid_value);

    // a presentation whose mod-p ideal is (a + 1), not a monomial
    QuotientPresentation not_mono;
    not_mono.p = 2;
    not_mono.modulus_exponent = 1;
    not_mono.degree_bound = 2;
    not_mono.relations = {{2}, {1, 1}, {0, 1, 1}};
    CHECK_THROWS_AS(mod_p_reduction(not_mono), not_monomial_ideal);
}

TEST_CASE("length is invariant under unimodular changes of the relation set") {
    Rng rng(77);
    auto fx = builtin_height2_fixtures();
    for (const auto& q : fx) {
        const long base = length_over_fp(q);
        for (int trial = 0; trial < 20; ++trial) {
            QuotientPresentation tweaked = q;
            // add an integer multiple of one relation to another; keep
            // the top rewrite relation and the p^N constant untouched as
            // destinations so the presentation stays well-formed
            auto degree_of = [&](std::size_t i) {
                for (int j = static_cast<int>(q.relations[i].size()) - 1; j >= 0; --j)
                    if (sgn(q.relations[i][static_cast<std::size_t>(j)]) != 0) return j;
                return -1;
            };
            std::vector<std::size_t> dests, sources;
            for (std::size_t i = 0; i < q.relations.size(); ++i) {
                const int deg = degree_of(i);
                if (deg == q.degree_bound) continue; // top rewrite
                sources.push_back(i);
                if (deg > 0) dests.push_back(i); // not the p^N constant
            }
            if (dests.empty() || sources.size() < 2) continue;
            const std::size_t a = dests[rng.below(dests.size())];
            const std::size_t b = sources[rng.below(sources.size())];
            if (a == b) continue;
            const long k = rng.range(-3, 3);
            auto& ra = tweaked.relations[a];
            const auto& rb = tweaked.relations[b];
            if (ra.size() < rb.size()) ra.resize(rb.size(), mpz_class(0));
            for (std::size_t j = 0; j < rb.size(); ++j) ra[j] += k * rb[j];
            CHECK(length_over_fp(tweaked) == base);
        }
    }
}

TEST_CASE("mod-p exponent equals the length with p adjoined") {
    for (const auto& q : builtin_height2_fixtures()) {
        QuotientPresentation with_p = q;
        with_p.relations.push_back({mpz_class(q.p)});
        CHECK(static_cast<long>(mod_p_reduction(q)) == length_over_fp(with_p));
    }
}

TEST_CASE("fixture JSON round trip matches the spec schema") {
    auto fx = builtin_height2_fixtures();
    Json j = fixture_to_json(fx[2]);
    CHECK(j["p"] == 2);
    CHECK(j["modulus_exponent"] == 3);
    CHECK(j["degree_bound"] == 7);
    CHECK(j["relations"][3] == Json::array({0, -2, 0, 0, 0, 0, 0, 1}));
    QuotientPresentation back = fixture_from_json(j);
    CHECK(back.relations == fx[2].relations);
    CHECK(length_over_fp(back) == 11);
}
