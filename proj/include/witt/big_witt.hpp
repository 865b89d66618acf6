#pragma once

#include <string>
#include <vector>

#include "witt/ghost.hpp"
#include "witt/ring.hpp"
#include "witt/series.hpp"
#include "witt/sparse_poly.hpp"

namespace witt {

// Integral (big) Witt vectors at full truncation {1..N}: coordinates
// x_1..x_N, ring structure certified through ghost components.

struct UniversalWittLaw {
    int trunc = 0;
    std::vector<SparsePoly> sum, prod, neg; // slot i <-> coordinate z_{i+1}
    bool integrality_certificate = false;
};

// Fresh derivation over Q with integrality certification.
UniversalWittLaw derive_universal_witt_law(int trunc);

// Process-wide cache: memory first, then the law cache directory (when
// set; loads re-run the symbolic ghost-compatibility check), then a
// fresh derivation.  Single-initialization per truncation.
const UniversalWittLaw& universal_witt_law(int trunc);

void save_universal_witt_law(const UniversalWittLaw& law, const std::string& path);
UniversalWittLaw load_universal_witt_law(const std::string& path);

// Directory for persisted law caches ("" disables disk lookup).
void set_law_cache_dir(const std::string& dir);
std::string law_cache_dir();
std::string witt_law_cache_file(int trunc); // file name under the cache dir

class BigWittVec {
public:
    BigWittVec(RingSpec ring, std::vector<RingElem> coords);
    static BigWittVec zero(const RingSpec& r, int trunc);
    static BigWittVec one(const RingSpec& r, int trunc);
    static BigWittVec teichmuller(const RingElem& a, int trunc);

    const RingSpec& ring() const { return ring_; }
    int trunc() const { return static_cast<int>(x_.size()); }
    const RingElem& coord(int k) const; // 1-based Witt index
    const std::vector<RingElem>& coords() const { return x_; }

    RingElem ghost(long n) const;
    std::vector<RingElem> ghosts() const;

    BigWittVec operator+(const BigWittVec& o) const;
    BigWittVec operator-(const BigWittVec& o) const;
    BigWittVec operator*(const BigWittVec& o) const;
    BigWittVec operator-() const;

    // s-isomorphism onto (1 + X A[[X]])^x: prod (1 - x_k X^k)^{-1}.
    TruncSeries to_series() const;
    static BigWittVec from_series(const TruncSeries& s);

    // A Witt vector is a unit iff every ghost component is.
    bool is_unit() const;
    BigWittVec inverse() const; // throws not_a_unit(n, gh) at the first failure

    // Ghost inversion over a torsion-free coefficient ring.
    static BigWittVec from_ghost(const RingSpec& r, const std::vector<RingElem>& g);

    BigWittVec map_ring(const RingSpec& target) const;

    bool operator==(const BigWittVec& o) const { return ring_ == o.ring_ && x_ == o.x_; }
    bool operator!=(const BigWittVec& o) const { return !(*this == o); }

private:
    void require_compatible(const BigWittVec& o) const;
    RingSpec ring_;
    std::vector<RingElem> x_;
};

// Evaluation of the cached symbolic law polynomials; used to cross-check
// the ghost-recursion arithmetic path at small truncations.
BigWittVec add_via_law_polys(const BigWittVec& a, const BigWittVec& b);
BigWittVec mul_via_law_polys(const BigWittVec& a, const BigWittVec& b);
BigWittVec neg_via_law_polys(const BigWittVec& a);

} // namespace witt
