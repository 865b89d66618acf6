#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/artin_hasse.hpp"
#include "witt/symgrp.hpp"

using namespace witt;

TEST_CASE("permutations") {
    Permutation id = Permutation::identity(4);
    CHECK(id.order() == 1);
    Permutation t({1, 0, 2, 3});          // (01)
    Permutation c({1, 2, 3, 0});          // 4-cycle
    CHECK(t.order() == 2);
    CHECK(c.order() == 4);
    CHECK(c.cycle_lengths() == std::vector<int>{4});
    CHECK(t.cycle_lengths() == std::vector<int>{2, 1, 1});
    CHECK(t.has_p_power_order(2));
    CHECK(!c.has_p_power_order(3));
    CHECK(!t.commutes_with(c));
    CHECK(c.compose(c).commutes_with(c));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), invalid_value);
}

TEST_CASE("symmetric group table") {
    const SymmetricGroup& g4 = SymmetricGroup::of(4);
    CHECK(g4.size() == 24);
    CHECK(g4.classes().size() == 5); // partitions of 4
    long class_total = 0;
    for (const auto& cl : g4.classes()) class_total += cl.size;
    CHECK(class_total == 24);
    CHECK(SymmetricGroup::of(0).size() == 1);
    CHECK(SymmetricGroup::of(1).size() == 1);
    CHECK_THROWS_AS(SymmetricGroup::of(10), cap_exceeded);

    // centralizer of a transposition in Sigma_4 has order 4
    long transposition = -1;
    for (long id = 0; id < g4.size(); ++id)
        if (g4.cycle_type(id) == std::vector<int>{2, 1, 1}) { transposition = id; break; }
    CHECK(g4.centralizer(transposition).size() == 4);
}

TEST_CASE("hom counts: pinned values") {
    CHECK(hom_count(1, 2, 2) == 2);
    CHECK(hom_count(2, 2, 2) == 4);
    CHECK(hom_count(1, 3, 3) == 3);
    CHECK(hom_count(1, 2, 0) == 1);
    CHECK(hom_count(1, 2, 1) == 1);
    CHECK(hom_count(2, 2, 1) == 1);
    // elements of 2-power order in Sigma_4: 1 + 6 + 3 + 6 = 16
    CHECK(hom_count(1, 2, 4) == 16);
    CHECK_THROWS_AS(hom_count(2, 2, 9), cap_exceeded);
    CHECK_THROWS_AS(hom_count(3, 2, 7), cap_exceeded);
    CHECK_THROWS_AS(hom_count(4, 2, 2), cap_exceeded);
}

TEST_CASE("hom counts: isoclass route agrees with tuple enumeration") {
    CHECK(hom_count_via_isoclasses(1, 2, 2) == 2);
    CHECK(hom_count_via_isoclasses(2, 2, 1) == 1);
    CHECK(hom_count_via_isoclasses(2, 2, 2) == 4);
    for (int h = 1; h <= 2; ++h)
        for (long p : {2L, 3L})
            for (int m = 0; m <= 8; ++m)
                CHECK(hom_count_via_isoclasses(h, p, m) == hom_count(h, p, m));
    for (int m = 0; m <= 6; ++m) {
        CHECK(hom_count_via_isoclasses(3, 2, m) == hom_count(3, 2, m));
        CHECK(hom_count_via_isoclasses(3, 3, m) == hom_count(3, 3, m));
    }
}

TEST_CASE("deterministic fan-out leaves counts unchanged") {
    mpz_class serial = hom_count(2, 2, 8);
    set_oracle_threads(4);
    CHECK(hom_count(2, 2, 8) == serial);
    CHECK(hom_count(3, 2, 6) == hom_count_via_isoclasses(3, 2, 6));
    set_oracle_threads(1);
}

TEST_CASE("fraction |Hom|/m! is p-local") {
    for (int h = 1; h <= 2; ++h)
        for (long p : {2L, 3L})
            for (int m = 1; m <= 8; ++m) {
                mpz_class f(1);
                for (int i = 2; i <= m; ++i) f *= i;
                mpq_class frac(hom_count(h, p, m));
                frac /= mpq_class(f);
                frac.canonicalize();
                CHECK(frac.get_den() % p != 0);
            }
}

TEST_CASE("sublattice enumeration and counting") {
    CHECK(subgroup_count(1, 2, 4) == 1);
    CHECK(subgroup_count(1, 7, 3) == 1);
    CHECK(subgroup_count(2, 2, 1) == 3);
    CHECK(subgroup_count(2, 2, 2) == 7);
    CHECK(subgroup_count(2, 3, 1) == 4);

    // explicit enumeration has the same cardinality and unique keys
    for (int h = 1; h <= 3; ++h)
        for (long p : {2L, 3L})
            for (int d = 0; d <= 3; ++d) {
                auto keys = enumerate_sublattices(h, p, d);
                CHECK(mpz_class(static_cast<long>(keys.size())) == subgroup_count(h, p, d));
                for (std::size_t i = 0; i + 1 < keys.size(); ++i) CHECK(keys[i] < keys[i + 1]);
            }

    // the generating series is the other route
    for (int h = 1; h <= 3; ++h)
        for (long p : {2L, 3L}) {
            SubgroupCountSeries s = nh_coeffs(h, p, 4);
            for (int d = 0; d <= 4; ++d)
                CHECK(subgroup_count(h, p, d) == s.coeffs[static_cast<std::size_t>(d)]);
        }

    CHECK_THROWS_AS(subgroup_count(5, 2, 1), cap_exceeded);
    CHECK_THROWS_AS(subgroup_count(2, 2, 7), cap_exceeded);
    CHECK_THROWS_AS(enumerate_sublattices(2, 2, 13), cap_exceeded);
}

TEST_CASE("elements of order dividing m") {
    CHECK(elements_of_order_dividing(3, 2) == 4);
    CHECK(elements_of_order_dividing(3, 3) == 3);
    CHECK(elements_of_order_dividing(4, 2) == 10);
    CHECK(elements_of_order_dividing(4, 1) == 1);
    CHECK_THROWS_AS(elements_of_order_dividing(10, 2), cap_exceeded);

    // Frobenius: m divides the count whenever m <= n
    for (int n = 1; n <= 8; ++n)
        for (long m = 1; m <= n; ++m)
            CHECK(elements_of_order_dividing(n, m) % m == 0);
}

TEST_CASE("mark identity at degree 1 is trivial") {
    // both sides are 1 + f(G/G) X
    MarkSpec f = formal_mark_lattice(2, 2, 4);
    PolySeries lhs = mark_lhs(f, 1), rhs = mark_rhs(f, 1);
    CHECK(lhs == rhs);
    CHECK(lhs.c[0] == SparsePoly::constant(1));
    CHECK(lhs.c[1] == SparsePoly::var(0)); // the full lattice's variable
}

TEST_CASE("unit marks recover the artin-hasse coefficients") {
    for (int h = 1; h <= 2; ++h)
        for (long p : {2L, 3L}) {
            const int M = 5;
            MarkSpec f = unit_mark_lattice(h, p);
            PolySeries lhs = mark_lhs(f, M), rhs = mark_rhs(f, M);
            CHECK(lhs == rhs);
            const ArtinHasseElement& e = artin_hasse(h, p, M);
            for (int m = 0; m <= M; ++m)
                CHECK(lhs.c[static_cast<std::size_t>(m)]
                      == SparsePoly::constant(e.series.coeff(m).value()));
        }
}

TEST_CASE("formal marks satisfy the exponential identity") {
    // free parameters: one variable per subgroup
    for (long p : {2L, 3L}) {
        MarkSpec f1 = formal_mark_lattice(1, p, 8);
        CHECK(mark_lhs(f1, 5) == mark_rhs(f1, 5));
    }
    MarkSpec f2 = formal_mark_lattice(2, 2, 8);
    CHECK(mark_lhs(f2, 6) == mark_rhs(f2, 6));

    // and the t^d specialization for G = Z_2: stabilizer of index 2^d
    // gets t^d
    MarkSpec td;
    td.group = MarkSpec::Group::p_adic_lattice;
    td.h = 1;
    td.p = 2;
    td.value = [](const SubgroupKey& k) {
        std::uint32_t d = 0;
        long idx = k.index;
        while (idx > 1) { idx /= 2; ++d; }
        return SparsePoly::var(0, d);
    };
    CHECK(mark_lhs(td, 4) == mark_rhs(td, 4));
}

TEST_CASE("marks over the integer line") {
    // f = 1: both sides are the exp form of sum X^n/n, i.e. 1/(1-X)
    MarkSpec u = unit_mark_integer_line();
    PolySeries lhs = mark_lhs(u, 6), rhs = mark_rhs(u, 6);
    CHECK(lhs == rhs);
    for (int m = 0; m <= 6; ++m) CHECK(lhs.c[static_cast<std::size_t>(m)] == SparsePoly::constant(1));

    MarkSpec f = formal_mark_integer_line(6);
    CHECK(mark_lhs(f, 6) == mark_rhs(f, 6));
    CHECK_THROWS_AS(mark_lhs(formal_mark_integer_line(12), 9), cap_exceeded);
}
