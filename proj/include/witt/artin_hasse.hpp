#pragma once

#include <string>
#include <vector>

#include "witt/p_witt.hpp"
#include "witt/rng.hpp"
#include "witt/series.hpp"

namespace witt {

// Height-h Artin-Hasse exponentials and the subgroup-count numbers
// driving them: N^h_{p^d} counts the subgroups of order p^d in
// (Q_p/Z_p)^h, with generating series 1/((1-T)(1-pT)...(1-p^{h-1}T)).

struct SubgroupCountSeries {
    int h = 0;
    long p = 0;
    std::vector<mpz_class> coeffs; // N^h_{p^0} .. N^h_{p^D}
};

SubgroupCountSeries nh_coeffs(int h, long p, int depth);

// p-adic limit N^h_{p^infinity} = [(1-p)...(1-p^{h-1})]^{-1} as a
// residue mod p^precision.
RingElem nh_infinity(int h, long p, int precision);

// The element in three linked representations: multiplicative series,
// big Witt coordinates, p-typical coordinates (all over Z_(p)).
struct ArtinHasseElement {
    int h = 0;
    long p = 0;
    int trunc = 0;
    TruncSeries series;
    BigWittVec big;
    PWittVec p_typical;
};

// Computed through the exponential form exp[sum_d N^h_{p^d} X^{p^d}/p^d]
// over Q, certified p-local, then converted; cached per (h, p, trunc).
const ArtinHasseElement& artin_hasse(int h, long p, int trunc);
ArtinHasseElement compute_artin_hasse(int h, long p, int trunc);

// e = 1 - AH^1: the idempotent splitting off the complement of the
// p-typical summand; ghosts are 0 at p-powers and 1 elsewhere.
BigWittVec idempotent_e(long p, int trunc);

struct AhCheckReport {
    int h = 0;
    long p = 0;
    int trunc = 0;
    int samples = 0;
    bool height1_projection_is_one = false;
    bool splitting_square_commutes = false;
    bool multiplication_invertible = false;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// (i) AH^1_p = 1; (ii) j((AH^h_p) * project(a)) = AH^h_Z * a with the
// expected ghost spectrum, on random a; (iii) AH^h_p is a unit.
AhCheckReport ah_identity_check(int h, long p, int trunc, Rng& rng, int samples = 50);

// Image of AH^h_p in W_p(F_p) = Z/p^{d+1}; equals nh_infinity(h, p, d+1).
RingElem ah_image_in_padics(int h, long p, int d);

} // namespace witt
