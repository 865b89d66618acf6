#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/artin_hasse.hpp"
#include "witt/symgrp.hpp"

using namespace witt;

namespace {

mpz_class factorial(int m) {
    mpz_class f(1);
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

bool is_power_of(long m, long p) {
    while (m % p == 0) m /= p;
    return m == 1;
}

} // namespace

TEST_CASE("subgroup count series") {
    SubgroupCountSeries h1 = nh_coeffs(1, 5, 6);
    for (const auto& c : h1.coeffs) CHECK(c == 1);

    SubgroupCountSeries h2 = nh_coeffs(2, 2, 3);
    CHECK(h2.coeffs == std::vector<mpz_class>{1, 3, 7, 15});

    SubgroupCountSeries h3 = nh_coeffs(3, 2, 3);
    CHECK(h3.coeffs[1] == 7);   // 1 + 2 + 4
    CHECK(h3.coeffs[2] == 35);  // matches 1/((1-T)(1-2T)(1-4T))

    // every coefficient is 1 mod p on the grid
    for (int h = 1; h <= 3; ++h)
        for (long p : {2L, 3L, 5L}) {
            SubgroupCountSeries s = nh_coeffs(h, p, 6);
            CHECK(s.coeffs[0] == 1);
            for (const auto& c : s.coeffs) CHECK(c % p == 1);
        }
}

TEST_CASE("p-adic limit of the subgroup counts") {
    CHECK(nh_infinity(1, 3, 6) == RingElem::one(RingSpec::mod_prime_power(3, 6)));
    // h=3, p=2: 1/((1-2)(1-4)) = 1/3, and 3 * 11 = 33 = 1 mod 32
    CHECK(nh_infinity(3, 2, 5) == RingElem::of(RingSpec::mod_prime_power(2, 5), 11));
    // h=2, p=3: 1/(1-3) = -1/2 = 13 mod 27
    CHECK(nh_infinity(2, 3, 3) == RingElem::of(RingSpec::mod_prime_power(3, 3), 13));

    // v_p(N^h_{p^d} - N^h_{p^infty}) >= d+1
    for (int h = 1; h <= 3; ++h)
        for (long p : {2L, 3L, 5L}) {
            SubgroupCountSeries s = nh_coeffs(h, p, 6);
            for (int d = 0; d <= 6; ++d) {
                const RingSpec R = RingSpec::mod_prime_power(p, d + 1);
                CHECK(RingElem::of(R, s.coeffs[static_cast<std::size_t>(d)])
                      == nh_infinity(h, p, d + 1));
            }
        }
}

TEST_CASE("artin-hasse series coefficients") {
    // X coefficient is 1 for every (h, p)
    for (int h = 1; h <= 3; ++h)
        for (long p : {2L, 3L})
            CHECK(artin_hasse(h, p, 4).series.coeff(1)
                  == RingElem::one(RingSpec::p_local(p)));

    // pinned small values
    const RingSpec Z2 = RingSpec::p_local(2);
    CHECK(artin_hasse(1, 2, 8).series.coeff(2) == RingElem::one(Z2));
    CHECK(artin_hasse(2, 2, 8).series.coeff(2) == RingElem::of(Z2, 2));
}

TEST_CASE("dual oracle: series coefficients equal hom counts over factorials") {
    struct Grid { int h; long p; int max_m; };
    for (const Grid& g : {Grid{1, 2, 8}, Grid{2, 2, 8}, Grid{3, 2, 6}, Grid{1, 3, 8}, Grid{2, 3, 8}}) {
        const ArtinHasseElement& e = artin_hasse(g.h, g.p, g.max_m);
        for (int m = 0; m <= g.max_m; ++m) {
            mpq_class expected(hom_count(g.h, g.p, m));
            expected /= mpq_class(factorial(m));
            expected.canonicalize();
            CHECK(e.series.coeff(m).value() == expected);
            // p-integrality came with clear_to_plocal; assert anyway
            CHECK(e.series.coeff(m).value().get_den() % g.p != 0);
        }
    }
}

TEST_CASE("ghost spectrum of the artin-hasse element") {
    // p-power indices up to p^4 for p = 2 and p^3 for p = 3
    for (int h = 1; h <= 2; ++h)
        for (long p : {2L, 3L}) {
            const int trunc = p == 2 ? 16 : 27;
            const ArtinHasseElement& e = artin_hasse(h, p, trunc);
            const SubgroupCountSeries s = nh_coeffs(h, p, 6);
            const RingSpec Zp = RingSpec::p_local(p);
            int d = 0;
            for (long m = 1; m <= trunc; ++m) {
                if (is_power_of(m, p)) {
                    CHECK(e.big.ghost(m) == RingElem::of(Zp, s.coeffs[static_cast<std::size_t>(d)]));
                    ++d;
                } else {
                    CHECK(e.big.ghost(m).is_zero());
                }
            }
            // the three representations stay linked
            CHECK(BigWittVec::from_series(e.series) == e.big);
            CHECK(project(e.big, p, e.p_typical.length()) == e.p_typical);
        }
}

TEST_CASE("idempotent e = 1 - AH^1") {
    BigWittVec e5 = idempotent_e(5, 6);
    CHECK(e5.ghost(5).is_zero());
    CHECK(e5.ghost(1).is_zero());
    CHECK(e5.ghost(6) == RingElem::one(RingSpec::p_local(5)));

    BigWittVec e2 = idempotent_e(2, 16);
    for (long m = 1; m <= 16; ++m) {
        if (is_power_of(m, 2)) CHECK(e2.ghost(m).is_zero());
        else CHECK(e2.ghost(m) == RingElem::one(RingSpec::p_local(2)));
    }
    CHECK(e2 * e2 == e2);
    // orthogonality against the complementary idempotent
    const ArtinHasseElement& ah1 = artin_hasse(1, 2, 16);
    CHECK(e2 * ah1.big == BigWittVec::zero(ah1.big.ring(), 16));
    CHECK(e2 + ah1.big == BigWittVec::one(ah1.big.ring(), 16));
}

TEST_CASE("identity suite") {
    Rng rng(42);
    AhCheckReport r1 = ah_identity_check(1, 2, 8, rng, 10);
    CHECK(r1.pass());
    CHECK(r1.height1_projection_is_one);

    AhCheckReport r2 = ah_identity_check(2, 2, 16, rng, 50);
    CHECK(r2.pass());
    CHECK(r2.splitting_square_commutes);
    CHECK(r2.multiplication_invertible);

    AhCheckReport r3 = ah_identity_check(3, 3, 9, rng, 20);
    CHECK(r3.pass());
}

TEST_CASE("image of AH^h_p in W_p(F_p)") {
    for (int d = 0; d <= 5; ++d)
        CHECK(ah_image_in_padics(1, 2, d)
              == RingElem::one(RingSpec::mod_prime_power(2, d + 1)));

    CHECK(ah_image_in_padics(2, 3, 2) == RingElem::of(RingSpec::mod_prime_power(3, 3), 13));
    CHECK(ah_image_in_padics(3, 2, 4) == RingElem::of(RingSpec::mod_prime_power(2, 5), 11));

    // equals the p-adic limit at every tested depth
    for (int h = 1; h <= 3; ++h)
        for (long p : {2L, 3L})
            for (int d = 0; d <= 6; ++d)
                CHECK(ah_image_in_padics(h, p, d) == nh_infinity(h, p, d + 1));

    // cross-route: ghost inversion agrees with projecting the series form
    for (int h = 1; h <= 2; ++h)
        for (long p : {2L, 3L}) {
            const int trunc = p == 2 ? 8 : 9;
            const ArtinHasseElement& e = artin_hasse(h, p, trunc);
            const int d = e.p_typical.length() - 1;
            CHECK(ah_image_in_padics(h, p, d)
                  == to_padic(e.p_typical.map_ring(RingSpec::prime_field(p))));
        }
}
