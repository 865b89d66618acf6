#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/int_matrix.hpp"
#include "witt/rng.hpp"
#include "witt/sparse_poly.hpp"

using namespace witt;

namespace {

IntMatrix mk(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<mpz_class>> z;
    for (auto& r : rows) z.emplace_back(r.begin(), r.end());
    return IntMatrix::from_rows(z);
}

std::vector<long> factors(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    std::vector<long> out;
    for (const auto& f : s.invariant_factors) out.push_back(f.get_si());
    return out;
}

} // namespace

TEST_CASE("smith normal form on the pinned examples") {
    CHECK(factors(IntMatrix::identity(2)) == std::vector<long>{1, 1});
    CHECK(factors(mk({{2, 0}, {0, 4}})) == std::vector<long>{2, 4});
    CHECK(factors(mk({{2, 0}, {1, 2}})) == std::vector<long>{1, 4});
}

TEST_CASE("smith normal form certificates and divisor chain on random matrices") {
    Rng rng(31);
    for (int iter = 0; iter < 200; ++iter) {
        const long r = rng.range(1, 6), c = rng.range(1, 6);
        IntMatrix m(r, c);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j) m.at(i, j) = rng.range(-99, 99);
        auto s = smith_normal_form(m);
        CHECK(s.certified);
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs(s.u.determinant()) == 1);
        CHECK(abs(s.v.determinant()) == 1);
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            CHECK(sgn(s.invariant_factors[i]) > 0);
            CHECK(mpz_divisible_p(s.invariant_factors[i + 1].get_mpz_t(),
                                  s.invariant_factors[i].get_mpz_t()));
        }
        if (r == c) {
            mpz_class det = m.determinant();
            if (sgn(det) != 0) {
                mpz_class prod(1);
                for (const auto& f : s.invariant_factors) prod *= f;
                CHECK(prod == abs(det));
            }
        }
    }
}

TEST_CASE("hermite row basis and membership") {
    // lattice spanned by (2,0) and (1,2): index 4 in Z^2
    std::vector<std::vector<mpz_class>> gens = {{mpz_class(2), mpz_class(0)},
                                                {mpz_class(1), mpz_class(2)}};
    IntMatrix h = hermite_row_basis(gens, 2);
    REQUIRE(h.rows() == 2);
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(0, 1) == 2);
    CHECK(h.at(1, 0) == 0);
    CHECK(h.at(1, 1) == 4);
    CHECK(lattice_contains(h, {mpz_class(2), mpz_class(0)}));
    CHECK(lattice_contains(h, {mpz_class(3), mpz_class(2)}));
    CHECK(!lattice_contains(h, {mpz_class(1), mpz_class(0)}));
    CHECK(!lattice_contains(h, {mpz_class(0), mpz_class(2)}));
}

TEST_CASE("hermite form is a lattice invariant") {
    Rng rng(47);
    for (int iter = 0; iter < 100; ++iter) {
        const long n = rng.range(2, 4);
        std::vector<std::vector<mpz_class>> gens;
        for (int i = 0; i < 5; ++i) {
            std::vector<mpz_class> row;
            for (long j = 0; j < n; ++j) row.emplace_back(rng.range(-9, 9));
            gens.push_back(row);
        }
        IntMatrix h1 = hermite_row_basis(gens, n);
        // shuffle and row-combine the generators; the canonical basis
        // must not move
        std::vector<std::vector<mpz_class>> tweaked = gens;
        for (int t = 0; t < 5; ++t) {
            const std::size_t i = rng.below(tweaked.size());
            const std::size_t j = rng.below(tweaked.size());
            if (i == j) continue;
            const long k = rng.range(-3, 3);
            for (long col = 0; col < n; ++col) tweaked[i][static_cast<std::size_t>(col)]
                += k * tweaked[j][static_cast<std::size_t>(col)];
        }
        IntMatrix h2 = hermite_row_basis(tweaked, n);
        CHECK(h1 == h2);
    }
}

TEST_CASE("sparse polynomial arithmetic and printing") {
    auto x = SparsePoly::var(0);
    auto y = SparsePoly::var(1);
    auto namer = [](VarId v) { return v == 0 ? std::string("x") : std::string("y"); };
    SparsePoly p = x * x - y.scaled(2) + SparsePoly::constant(mpq_class(1, 3));
    CHECK(p.str(namer) == "1/3 + x^2 - 2*y");
    CHECK(SparsePoly().str(namer) == "0");
    CHECK((x - x).is_zero());
    CHECK((x + y).pow(2) == x * x + (x * y).scaled(2) + y * y);
    CHECK(!p.integral_coefficients());
    CHECK(p.p_local_coefficients(2));
    CHECK(!p.p_local_coefficients(3));

    auto lookup = [](const std::string& s) -> VarId { return s == "x" ? 0 : 1; };
    CHECK(SparsePoly::parse("1/3 + x^2 - 2*y", lookup) == p);
    CHECK(SparsePoly::parse("0", lookup).is_zero());
    CHECK(SparsePoly::parse("-x*y + y*x", lookup).is_zero());
    CHECK(SparsePoly::parse("x*x", lookup) == x.pow(2));

    const RingSpec M = RingSpec::mod_prime_power(5, 2);
    std::vector<RingElem> vals = {RingElem::of(M, 3), RingElem::of(M, 4)};
    // 1/3 + 9 - 8 mod 25 with 1/3 = 17 (3*17 = 51 = 2*25+1)
    CHECK(p.eval(vals, M) == RingElem::of(M, (17 + 9 - 8) % 25));
}

TEST_CASE("poly series exponential matches scalar exponential") {
    // embed rationals as constants: exp(X + X^2/2) = 1 + X + X^2 + ...
    PolySeries a = PolySeries::zero(4);
    a.c[1] = SparsePoly::constant(1);
    a.c[2] = SparsePoly::constant(mpq_class(1, 2));
    PolySeries e = poly_series_exp(a);
    CHECK(e.c[0] == SparsePoly::constant(1));
    CHECK(e.c[1] == SparsePoly::constant(1));
    CHECK(e.c[2] == SparsePoly::constant(1));
    // with a formal variable: exp(tX) has coefficients t^m/m!
    PolySeries b = PolySeries::zero(4);
    b.c[1] = SparsePoly::var(0);
    PolySeries eb = poly_series_exp(b);
    CHECK(eb.c[3] == SparsePoly::var(0, 3).scaled(mpq_class(1, 6)));
    CHECK(eb.c[4] == SparsePoly::var(0, 4).scaled(mpq_class(1, 24)));
}
