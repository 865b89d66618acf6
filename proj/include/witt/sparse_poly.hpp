#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "witt/ring.hpp"

namespace witt {

// Sparse multivariate polynomials over Q.  Monomials are finitely
// supported exponent vectors stored as (variable, exponent) pairs with
// strictly increasing variable ids and positive exponents; the term map
// never stores a zero coefficient.  The map order doubles as the
// canonical term order for printing.

using VarId = std::uint32_t;
using Monomial = std::vector<std::pair<VarId, std::uint32_t>>;

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

class SparsePoly {
public:
    using TermMap = std::map<Monomial, mpq_class, MonomialOrder>;

    SparsePoly() = default; // zero
    static SparsePoly constant(const mpq_class& c);
    static SparsePoly var(VarId v, std::uint32_t exp = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    mpq_class coefficient(const Monomial& m) const;
    // Maximum variable id + 1 over the support (0 for constants).
    VarId var_span() const;

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly pow(std::uint32_t e) const;
    SparsePoly scaled(const mpq_class& c) const;
    // Divide every coefficient by k; exact over Q.
    SparsePoly divided(long k) const;

    void add_term(const Monomial& m, const mpq_class& c); // merges, drops zeros

    bool integral_coefficients() const;
    bool p_local_coefficients(long p) const;
    // Sorted distinct coefficient denominators (diagnostic).
    std::vector<mpz_class> denominators() const;

    // Evaluate with values[var] substituted for each variable, in the
    // given ring.  Rational coefficients require the ring to accept
    // them (see RingElem from mpq semantics in reduce_to).
    RingElem eval(const std::vector<RingElem>& values, const RingSpec& ring) const;

    std::string str(const std::function<std::string(VarId)>& name) const;
    static SparsePoly parse(const std::string& s,
                            const std::function<VarId(const std::string&)>& lookup);

    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

// Truncated series with SparsePoly coefficients, enough for the
// exponential identity for marks checked with formal coefficients.
struct PolySeries {
    std::vector<SparsePoly> c; // c[0..M]

    int trunc() const { return static_cast<int>(c.size()) - 1; }
    static PolySeries zero(int m);
    static PolySeries one(int m);
    PolySeries operator*(const PolySeries& o) const;
    bool operator==(const PolySeries& o) const { return c == o.c; }
};

// exp of a PolySeries with zero constant term, via the derivative
// recurrence (one exact division by the index per coefficient).
PolySeries poly_series_exp(const PolySeries& a);

} // namespace witt
