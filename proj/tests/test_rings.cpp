#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/ring.hpp"
#include "witt/rng.hpp"

using namespace witt;

namespace {

std::vector<RingSpec> all_specs() {
    return {RingSpec::integers(), RingSpec::rationals(), RingSpec::p_local(3),
            RingSpec::mod_prime_power(2, 5), RingSpec::prime_field(7)};
}

} // namespace

TEST_CASE("ring spec validation") {
    CHECK_THROWS_AS(RingSpec::p_local(4), invalid_ring);
    CHECK_THROWS_AS(RingSpec::prime_field(1), invalid_ring);
    CHECK_THROWS_AS(RingSpec::mod_prime_power(6, 2), invalid_ring);
    CHECK_THROWS_AS(RingSpec::mod_prime_power(2, 0), invalid_ring);
    CHECK_THROWS_AS(RingSpec::prime_field(65537), invalid_ring); // above 2^16
    CHECK(RingSpec::mod_prime_power(3, 4).modulus() == 81);
    CHECK(RingSpec::prime_field(5).modulus() == 5);
    CHECK(is_small_prime(2));
    CHECK(is_small_prime(65521));
    CHECK(!is_small_prime(65521L * 2));
    CHECK(!is_small_prime(1));
}

TEST_CASE("canonical forms") {
    const RingSpec Q = RingSpec::rationals();
    CHECK(RingElem(Q, mpq_class(4, 6)).str() == "2/3");
    CHECK(RingElem(Q, mpq_class(-4, 2)).str() == "-2");

    const RingSpec Z = RingSpec::integers();
    CHECK_THROWS_AS(RingElem(Z, mpq_class(1, 2)), invalid_value);

    const RingSpec Z3 = RingSpec::p_local(3);
    CHECK(RingElem(Z3, mpq_class(5, 4)).str() == "5/4");
    CHECK_THROWS_AS(RingElem(Z3, mpq_class(1, 3)), not_p_local);
    CHECK_THROWS_AS(RingElem(Z3, mpq_class(2, 6)), not_p_local);

    const RingSpec M = RingSpec::mod_prime_power(2, 3);
    CHECK(RingElem::of(M, -1).str() == "7");
    CHECK(RingElem::of(M, 19).str() == "3");
    // denominators invertible mod 8 fold in
    CHECK(RingElem(M, mpq_class(1, 3)).str() == "3"); // 3*3 = 9 = 1 mod 8
    CHECK_THROWS_AS(RingElem(M, mpq_class(1, 2)), non_exact_division);

    CHECK(RingElem::parse(Q, "-7/2").str() == "-7/2");
    CHECK_THROWS_AS(RingElem::parse(Q, "zzz"), invalid_value);
}

TEST_CASE("units and division per ring") {
    const RingSpec Z = RingSpec::integers();
    CHECK(RingElem::of(Z, -1).is_unit());
    CHECK(!RingElem::of(Z, 2).is_unit());
    CHECK(RingElem::of(Z, 6).div_exact(RingElem::of(Z, 3)) == RingElem::of(Z, 2));
    CHECK_THROWS_AS(RingElem::of(Z, 7).div_exact(RingElem::of(Z, 3)), non_exact_division);

    const RingSpec Z3 = RingSpec::p_local(3);
    CHECK(RingElem(Z3, mpq_class(2, 5)).is_unit());
    CHECK(!RingElem(Z3, mpq_class(3, 5)).is_unit());
    // dividing by 2 is fine, dividing by 3 must keep p-locality
    CHECK(RingElem::of(Z3, 1).div_exact(RingElem::of(Z3, 2)) == RingElem(Z3, mpq_class(1, 2)));
    CHECK_THROWS_AS(RingElem::of(Z3, 1).div_exact(RingElem::of(Z3, 3)), non_exact_division);
    CHECK(RingElem::of(Z3, 6).div_exact(RingElem::of(Z3, 3)) == RingElem::of(Z3, 2));

    const RingSpec M = RingSpec::mod_prime_power(3, 2);
    CHECK(RingElem::of(M, 2).inverse() == RingElem::of(M, 5)); // 2*5 = 10 = 1 mod 9
    CHECK_THROWS_AS(RingElem::of(M, 3).inverse(), not_a_unit);
    CHECK_THROWS_AS(RingElem::of(M, 1).div_exact(RingElem::of(M, 3)), non_exact_division);

    const RingSpec F = RingSpec::prime_field(5);
    CHECK(RingElem::of(F, 4).div_exact(RingElem::of(F, 2)) == RingElem::of(F, 2));
    CHECK(RingElem::of(F, 1).div_exact(RingElem::of(F, 3)) == RingElem::of(F, 2)); // 3*2 = 6 = 1
}

TEST_CASE("ring axioms on 1000 random triples per spec") {
    for (const auto& R : all_specs()) {
        Rng rng(2024);
        for (int i = 0; i < 1000; ++i) {
            RingElem a = rng.element(R), b = rng.element(R), c = rng.element(R);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a + RingElem::zero(R) == a);
            CHECK(a * RingElem::one(R) == a);
            CHECK(a + (-a) == RingElem::zero(R));
        }
    }
}

TEST_CASE("p-local canonical form closed under arithmetic") {
    const RingSpec Z5 = RingSpec::p_local(5);
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        RingElem a = rng.element(Z5, 30), b = rng.element(Z5, 30);
        for (const RingElem& r : {a + b, a - b, a * b}) {
            mpq_class v = r.value();
            CHECK(gcd(v.get_num(), v.get_den()) == 1);
            CHECK(v.get_den() % 5 != 0);
        }
        if (b.is_unit()) {
            RingElem q = a.div_exact(b);
            CHECK(q.value().get_den() % 5 != 0);
            CHECK(q * b == a);
        }
    }
}

TEST_CASE("powers") {
    const RingSpec Z = RingSpec::integers();
    CHECK(RingElem::of(Z, 3).pow(4) == RingElem::of(Z, 81));
    CHECK(RingElem::of(Z, -2).pow(0) == RingElem::one(Z));
    const RingSpec M = RingSpec::mod_prime_power(2, 10);
    CHECK(RingElem::of(M, 3).pow(16) == RingElem::of(M, mpz_class("43046721") % 1024));
    const RingSpec Q = RingSpec::rationals();
    CHECK(RingElem(Q, mpq_class(2, 3)).pow(3) == RingElem(Q, mpq_class(8, 27)));
}

TEST_CASE("natural reduction maps") {
    const RingSpec Z = RingSpec::integers();
    const RingSpec Q = RingSpec::rationals();
    const RingSpec Z3 = RingSpec::p_local(3);
    const RingSpec M9 = RingSpec::mod_prime_power(3, 2);
    const RingSpec F3 = RingSpec::prime_field(3);

    CHECK(reduce_to(RingElem::of(Z, 14), F3) == RingElem::of(F3, 2));
    CHECK(reduce_to(RingElem::of(Z, -1), M9) == RingElem::of(M9, 8));
    CHECK(reduce_to(RingElem(Z3, mpq_class(1, 2)), M9) == RingElem::of(M9, 5));
    CHECK(reduce_to(RingElem::of(M9, 7), F3) == RingElem::of(F3, 1));
    CHECK(reduce_to(RingElem::of(Z, 5), Q) == RingElem::of(Q, 5));
    CHECK(reduce_to(RingElem(Q, mpq_class(7, 2)), Z3) == RingElem(Z3, mpq_class(7, 2)));

    CHECK_THROWS_AS(reduce_to(RingElem(Q, mpq_class(1, 3)), Z3), not_p_local);
    CHECK_THROWS_AS(reduce_to(RingElem(Q, mpq_class(1, 3)), M9), not_p_local);
    CHECK_THROWS_AS(reduce_to(RingElem::of(F3, 1), M9), invalid_value);      // precision up
    CHECK_THROWS_AS(reduce_to(RingElem::of(M9, 1), RingSpec::mod_prime_power(2, 2)),
                    invalid_value); // cross-prime
    CHECK_THROWS_AS(reduce_to(RingElem::of(F3, 1), Z), invalid_value);

    // reduction is a ring map
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        RingElem a = rng.element(Z, 50), b = rng.element(Z, 50);
        CHECK(reduce_to(a + b, M9) == reduce_to(a, M9) + reduce_to(b, M9));
        CHECK(reduce_to(a * b, M9) == reduce_to(a, M9) * reduce_to(b, M9));
        CHECK(reduce_to(a + b, F3) == reduce_to(a, F3) + reduce_to(b, F3));
        CHECK(reduce_to(a * b, F3) == reduce_to(a, F3) * reduce_to(b, F3));
    }
}
