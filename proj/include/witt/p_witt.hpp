#pragma once

#include <functional>
#include <string>
#include <vector>

#include "witt/big_witt.hpp"
#include "witt/ghost.hpp"
#include "witt/ring.hpp"

namespace witt {

// p-typical Witt vectors of finite length d+1: coordinates a_0..a_d
// sitting on the p-power indices of the big Witt vector.

// p-power index list {1, p, ..., p^{len-1}}.
std::vector<long> p_power_indices(long p, int len);
// Largest length with p^{len-1} <= trunc.
int p_typical_length_for(long p, int trunc);

struct PTypicalLaw {
    long p = 0;
    int len = 0;
    std::vector<SparsePoly> sum, prod, neg; // slot k <-> coordinate z_{p^k}
    bool integrality_certificate = false;
};

PTypicalLaw derive_p_typical_law(long p, int len);
const PTypicalLaw& p_typical_law(long p, int len); // cached as universal_witt_law
void save_p_typical_law(const PTypicalLaw& law, const std::string& path);
PTypicalLaw load_p_typical_law(const std::string& path);
std::string p_typical_law_cache_file(long p, int len);

// Universal coordinates of the section j of the projection
// W_Z -> W_p over p-local rings; coefficients are p-local rationals,
// certified as such (not integral in general).
struct SectionLaw {
    long p = 0;
    int len = 0;
    int trunc = 0;
    std::vector<SparsePoly> coords; // s_1..s_N in variables x0..x_{len-1}
    bool plocal_certificate = false;
    std::vector<mpz_class> observed_denominators; // diagnostic, sorted distinct
};

SectionLaw derive_section_law(long p, int trunc);
const SectionLaw& section_law(long p, int trunc);
void save_section_law(const SectionLaw& law, const std::string& path);
SectionLaw load_section_law(const std::string& path);
std::string section_law_cache_file(long p, int trunc);

class PWittVec {
public:
    PWittVec(long p, RingSpec ring, std::vector<RingElem> coords);
    static PWittVec zero(long p, const RingSpec& r, int len);
    static PWittVec one(long p, const RingSpec& r, int len);
    static PWittVec teichmuller(long p, const RingElem& a, int len);

    long prime() const { return p_; }
    const RingSpec& ring() const { return ring_; }
    int length() const { return static_cast<int>(a_.size()); }
    const RingElem& coord(int k) const; // 0-based
    const std::vector<RingElem>& coords() const { return a_; }

    // gh_{p^k}(a) = sum_{j<=k} p^j a_j^{p^{k-j}}
    RingElem ghost(int k) const;
    std::vector<RingElem> ghosts() const;

    PWittVec operator+(const PWittVec& o) const;
    PWittVec operator-(const PWittVec& o) const;
    PWittVec operator*(const PWittVec& o) const;
    PWittVec operator-() const;

    bool is_unit() const;
    PWittVec inverse() const; // throws not_a_unit(k, gh) with k the p-power exponent

    static PWittVec from_ghost(long p, const RingSpec& r, const std::vector<RingElem>& g);
    PWittVec map_ring(const RingSpec& target) const;

    bool operator==(const PWittVec& o) const {
        return p_ == o.p_ && ring_ == o.ring_ && a_ == o.a_;
    }
    bool operator!=(const PWittVec& o) const { return !(*this == o); }

private:
    void require_compatible(const PWittVec& o) const;
    long p_;
    RingSpec ring_;
    std::vector<RingElem> a_;
};

// Restriction to the p-power coordinates; needs p^{len-1} <= trunc(w).
PWittVec project(const BigWittVec& w, long p, int len);

// The p-local section j of project: gh_{p^k}(j a) = gh_{p^k}(a) and
// gh_m(j a) = 0 off p-powers.  Needs a p-local coefficient ring and
// length(a) = p_typical_length_for(p, trunc), so project(j(a)) = a.
BigWittVec section_j(const PWittVec& a, int trunc);

// Ghost contracts gh_{p^k}(F a) = gh_{p^{k+1}}(a) and V = shift.
PWittVec frobenius(const PWittVec& a);
PWittVec verschiebung(const PWittVec& a);

// Lift coordinates of a vector over F_p into A, evaluate gh_{p^d},
// reduce into Z/p^{d+1}; the result does not depend on the lifts.
// A is one of Z, Z_(p), Z/p^M with M >= d+1.
using CoordLift = std::function<RingElem(int, const RingElem&)>;
RingElem tilde_ghost(const PWittVec& abar, int d, const RingSpec& lift_ring,
                     const CoordLift& lift = {});

// The ring isomorphism W_p(F_p) at length d+1 onto Z/p^{d+1}, and its
// inverse.
RingElem to_padic(const PWittVec& a);
PWittVec from_padic(const RingElem& r);

// via_law_polys variants to cross-check the arithmetic path.
PWittVec p_add_via_law_polys(const PWittVec& a, const PWittVec& b);
PWittVec p_mul_via_law_polys(const PWittVec& a, const PWittVec& b);
BigWittVec section_via_law_polys(const PWittVec& a, int trunc);

} // namespace witt
