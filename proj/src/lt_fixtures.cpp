#include "witt/lt_fixtures.hpp"

#include <algorithm>

#include "witt/artin_hasse.hpp"
#include "witt/int_matrix.hpp"

namespace witt {

namespace {

int poly_degree(const std::vector<mpz_class>& c) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (sgn(c[static_cast<std::size_t>(i)]) != 0) return i;
    return -1; // zero polynomial
}

void validate(const QuotientPresentation& q) {
    if (!is_small_prime(q.p)) throw invalid_ring("p = " + std::to_string(q.p) + " is not a small prime");
    if (q.modulus_exponent < 1) throw invalid_value("modulus exponent must be >= 1");
    if (q.degree_bound < 1) throw invalid_value("degree bound must be >= 1");
}

// The designated monic top relation: degree == degree_bound, leading
// coefficient a unit.  Everything else must reduce below the bound.
int find_top_relation(const QuotientPresentation& q) {
    for (std::size_t i = 0; i < q.relations.size(); ++i) {
        const int deg = poly_degree(q.relations[i]);
        if (deg == q.degree_bound) {
            const mpz_class& lead = q.relations[i][static_cast<std::size_t>(deg)];
            if (lead == 1 || lead == -1) return static_cast<int>(i);
        }
    }
    return -1;
}

} // namespace

long length_over_fp(const QuotientPresentation& q) {
    validate(q);
    const int top = find_top_relation(q);
    if (top < 0)
        throw non_terminating_reduction("no monic relation of degree "
                                        + std::to_string(q.degree_bound) + " bounds the quotient");
    const int d = q.degree_bound;

    mpz_class pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(q.p),
                  static_cast<unsigned long>(q.modulus_exponent));
    bool has_modulus = false;
    for (const auto& r : q.relations)
        if (poly_degree(r) == 0 && (r[0] == pn || r[0] == -pn)) has_modulus = true;
    if (!has_modulus)
        throw invalid_value("relations must include the coefficient modulus p^N = " + pn.get_str());

    // rewrite rule a^D = -(c_0 + ... + c_{D-1} a^{D-1}) / c_D
    const auto& t = q.relations[static_cast<std::size_t>(top)];
    const mpz_class lead = t[static_cast<std::size_t>(d)];
    std::vector<mpz_class> rewrite(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        rewrite[static_cast<std::size_t>(i)] =
            (i < static_cast<int>(t.size())) ? mpz_class(-t[static_cast<std::size_t>(i)] * lead) : mpz_class(0);

    auto reduce = [&](std::vector<mpz_class> c) {
        for (int deg = poly_degree(c); deg >= d; deg = poly_degree(c)) {
            const mpz_class coef = c[static_cast<std::size_t>(deg)];
            c[static_cast<std::size_t>(deg)] = 0;
            for (int i = 0; i < d; ++i)
                c[static_cast<std::size_t>(deg - d + i)] += coef * rewrite[static_cast<std::size_t>(i)];
        }
        c.resize(static_cast<std::size_t>(d), mpz_class(0));
        return c;
    };

    auto times_a = [&](const std::vector<mpz_class>& c) {
        std::vector<mpz_class> out(static_cast<std::size_t>(d) + 1, mpz_class(0));
        for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i + 1)] = c[static_cast<std::size_t>(i)];
        return reduce(std::move(out));
    };

    // generators a^i r for 0 <= i < D; the monic top relation makes the
    // multiplication-by-a operator integral over these (its matrix has a
    // monic characteristic polynomial), so the span is already a-stable.
    std::vector<std::vector<mpz_class>> gens;
    for (std::size_t ri = 0; ri < q.relations.size(); ++ri) {
        if (static_cast<int>(ri) == top) continue;
        std::vector<mpz_class> v = reduce(q.relations[ri]);
        for (int i = 0; i < d; ++i) {
            gens.push_back(v);
            if (i + 1 < d) v = times_a(v);
        }
    }
    if (gens.empty()) throw non_terminating_reduction("no relations below the degree bound");

    // constructive closure check: a * L must stay inside L
    IntMatrix basis = hermite_row_basis(gens, d);
    for (const auto& g : gens)
        if (!lattice_contains(basis, times_a(g)))
            throw non_terminating_reduction("relation lattice is not stable under multiplication by a");

    SmithNormalForm snf = smith_normal_form(IntMatrix::from_rows(gens));
    if (static_cast<int>(snf.invariant_factors.size()) != d)
        throw non_terminating_reduction("quotient is not finite");
    long length = 0;
    for (const auto& f : snf.invariant_factors) {
        mpz_class v = f;
        while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(q.p))) {
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(q.p));
            ++length;
        }
        if (v != 1)
            throw certification_failure("invariant factor " + f.get_str() + " is not a power of p");
    }
    return length;
}

int mod_p_reduction(const QuotientPresentation& q) {
    validate(q);
    // gcd of the relations in F_p[a]
    const long p = q.p;
    auto mod_p = [&](const std::vector<mpz_class>& c) {
        std::vector<long> out;
        out.reserve(c.size());
        for (const auto& x : c) {
            mpz_class r;
            mpz_class pz(p);
            mpz_mod(r.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
            out.push_back(r.get_si());
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    auto poly_mod = [&](std::vector<long> a, const std::vector<long>& b) {
        // remainder of a by b over F_p; b monic after scaling
        const long inv_lead = [&] {
            long l = b.back() % p;
            for (long x = 1; x < p; ++x)
                if ((l * x) % p == 1) return x;
            throw invalid_value("leading coefficient not invertible");
        }();
        while (a.size() >= b.size() && !a.empty()) {
            long factor = (a.back() * inv_lead) % p;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                long v = (a[shift + i] - factor * b[i]) % p;
                a[shift + i] = (v % p + p) % p;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        return a;
    };
    std::vector<long> g;
    for (const auto& r : q.relations) {
        std::vector<long> c = mod_p(r);
        if (c.empty()) continue;
        if (g.empty()) { g = c; continue; }
        // Euclid
        std::vector<long> x = g, y = c;
        while (!y.empty()) {
            std::vector<long> rem = poly_mod(x, y);
            x = y;
            y = rem;
        }
        g = x;
    }
    if (g.empty())
        throw not_monomial_ideal("all relations vanish mod p");
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
        if (g[i] != 0)
            throw not_monomial_ideal("mod-p ideal generator is not a monomial");
    return static_cast<int>(g.size()) - 1;
}

std::vector<QuotientPresentation> builtin_height2_fixtures() {
    // O/I_1 = Z_2[[a]]/(2, a)
    QuotientPresentation f1;
    f1.p = 2;
    f1.modulus_exponent = 1;
    f1.degree_bound = 1;
    f1.relations = {{2}, {0, 1}};
    // O/I_2 = Z_2[[a]]/(4, 2a, a^3 - 2)
    QuotientPresentation f2;
    f2.p = 2;
    f2.modulus_exponent = 2;
    f2.degree_bound = 3;
    f2.relations = {{4}, {0, 2}, {-2, 0, 0, 1}};
    // O/I_3 = Z_2[[a]]/(8, 4a, 2a^3 - 4, a^7 - 2a)
    QuotientPresentation f3;
    f3.p = 2;
    f3.modulus_exponent = 3;
    f3.degree_bound = 7;
    f3.relations = {{8}, {0, 4}, {-4, 0, 0, 2}, {0, -2, 0, 0, 0, 0, 0, 1}};
    return {f1, f2, f3};
}

FixtureReport verify_height2_suite(const std::vector<QuotientPresentation>& fixtures) {
    FixtureReport rep;
    const SubgroupCountSeries nh = nh_coeffs(2, 2, static_cast<int>(fixtures.size()));
    mpz_class partial(0);
    long prev_length = 0;
    for (std::size_t d = 0; d < fixtures.size(); ++d) {
        FixtureCheck chk;
        chk.name = "O/I_" + std::to_string(d + 1);
        partial += nh.coeffs[d];
        if (!partial.fits_slong_p())
            throw cap_exceeded("expected length overflows");
        chk.expected_length = partial.get_si();
        chk.expected_exponent = static_cast<int>(nh.coeffs[d].get_si());
        try {
            chk.length = length_over_fp(fixtures[d]);
            chk.mod_p_exponent = mod_p_reduction(fixtures[d]);
        } catch (const error& e) {
            rep.failures.push_back(chk.name + ": " + e.what());
            rep.checks.push_back(chk);
            continue;
        }
        chk.ok = true;
        if (chk.length != chk.expected_length) {
            chk.ok = false;
            rep.failures.push_back(chk.name + ": length " + std::to_string(chk.length)
                                   + " != partial sum " + std::to_string(chk.expected_length));
        }
        if (chk.mod_p_exponent != chk.expected_exponent) {
            chk.ok = false;
            rep.failures.push_back(chk.name + ": mod-p exponent " + std::to_string(chk.mod_p_exponent)
                                   + " != N^2 coefficient " + std::to_string(chk.expected_exponent));
        }
        // telescoping: length(O/I_{d+1}) - length(O/I_d) = N^2_{p^d}
        if (chk.length - prev_length != nh.coeffs[d]) {
            chk.ok = false;
            rep.failures.push_back(chk.name + ": length difference "
                                   + std::to_string(chk.length - prev_length)
                                   + " != graded rank " + nh.coeffs[d].get_str());
        }
        prev_length = chk.length;
        rep.checks.push_back(chk);
    }
    return rep;
}

FixtureReport verify_height2_suite() { return verify_height2_suite(builtin_height2_fixtures()); }

} // namespace witt
