#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "witt/sparse_poly.hpp"

namespace witt {

// Brute-force oracles over symmetric groups and p-adic lattices:
// Hom-set counts, subgroup counts, and the exponential identity for
// marks.  Everything here is exact; enumeration caps are hard errors,
// never silent truncations.

class Permutation {
public:
    explicit Permutation(std::vector<std::uint8_t> images);
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint8_t>& images() const { return img_; }

    Permutation compose(const Permutation& o) const; // (this o o)(i) = this(o(i))
    bool commutes_with(const Permutation& o) const;
    std::vector<int> cycle_lengths() const; // descending
    long order() const;
    bool has_p_power_order(long p) const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<std::uint8_t> img_;
};

// Element table of Sigma_m in lexicographic order; element ids are
// table positions.  Degrees up to 9.
class SymmetricGroup {
public:
    static const SymmetricGroup& of(int degree);

    int degree() const { return m_; }
    long size() const { return size_; }
    const std::uint8_t* images(long id) const { return flat_.data() + static_cast<std::size_t>(id) * static_cast<std::size_t>(m_); }

    bool commute(long a, long b) const;
    bool p_power_order(long id, long p) const;
    std::vector<int> cycle_type(long id) const; // descending cycle lengths

    struct ConjClass {
        std::vector<int> type;
        long rep;
        long size;
    };
    // Grouped by cycle type in deterministic order.
    const std::vector<ConjClass>& classes() const { return classes_; }

    std::vector<std::int32_t> all_ids() const;
    std::vector<std::int32_t> centralizer(long id) const;
    std::vector<std::int32_t> centralizer_in(const std::vector<std::int32_t>& c, long id) const;

private:
    explicit SymmetricGroup(int degree);
    int m_;
    long size_;
    std::vector<std::uint8_t> flat_;
    std::vector<ConjClass> classes_;
};

// |Hom(Z_p^h, Sigma_m)|: pairwise-commuting h-tuples of p-power order,
// by centralizer recursion.  Caps: m <= 8 for h <= 2, m <= 6 for h = 3.
mpz_class hom_count(int h, long p, int m);

// The same count through automorphism-weighted isomorphism classes of
// finite Z_p^h-sets; structurally unrelated to the tuple recursion.
mpz_class hom_count_via_isoclasses(int h, long p, int m);

// Subgroups of order p^d in (Q_p/Z_p)^h, counted via index-p^d
// sublattices of Z_p^h in Hermite normal form.  Caps: h <= 4, d <= 6.
mpz_class subgroup_count(int h, long p, int d);

// |{g in Sigma_degree : g^order = 1}|; degree <= 9.
mpz_class elements_of_order_dividing(int degree, long order);

// Deterministic fan-out across top-level conjugacy classes (partial
// counts combine by summation only, so results do not depend on the
// schedule).  0 or 1 means serial.
void set_oracle_threads(int threads);
int oracle_threads();

// Canonical key of a finite-index subgroup: the row-style Hermite basis
// of the corresponding sublattice (upper triangular, entries above each
// pivot reduced mod the pivot), flattened row-major.  For G = Z the key
// is the 1x1 matrix [n].
struct SubgroupKey {
    std::vector<long> hnf;
    long index = 1;
    bool operator==(const SubgroupKey& o) const { return hnf == o.hnf; }
    bool operator<(const SubgroupKey& o) const {
        return index != o.index ? index < o.index : hnf < o.hnf;
    }
};

// All index-p^d sublattices of Z^h, explicitly; deterministic order.
// Guarded by p^d <= 4096 (only small indices are ever enumerated).
std::vector<SubgroupKey> enumerate_sublattices(int h, long p, int d);

// A mark: an isomorphism-invariant multiplicative function on finite
// G-sets, with values in Q or a formal polynomial ring over Q.  Only
// the two admissible groups that matter are supported.
struct MarkSpec {
    enum class Group { integer_line, p_adic_lattice };
    Group group = Group::p_adic_lattice;
    int h = 1;
    long p = 2;
    std::function<SparsePoly(const SubgroupKey&)> value;
};

MarkSpec unit_mark_lattice(int h, long p);
MarkSpec unit_mark_integer_line();
// One fresh variable per subgroup of index <= max_degree, so one check
// subsumes every numeric specialization.
MarkSpec formal_mark_lattice(int h, long p, int max_degree);
MarkSpec formal_mark_integer_line(int max_degree);

// sum_m X^m/m! sum_gamma f(gamma), by homomorphism enumeration.
PolySeries mark_lhs(const MarkSpec& mark, int trunc);
// exp[ sum_H X^{[G:H]}/[G:H] f(G/H) ] over finite-index subgroups.
PolySeries mark_rhs(const MarkSpec& mark, int trunc);

} // namespace witt
