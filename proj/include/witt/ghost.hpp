#pragma once

#include <vector>

#include "witt/ring.hpp"
#include "witt/sparse_poly.hpp"

namespace witt {

// Shared ghost-component machinery over an index set.  The two sets in
// use are {1..N} (integral Witt vectors) and {1, p, ..., p^d}
// (p-typical); both are closed under taking divisors that lie in the
// set, which is what the recursions below need.
//
// Slot i holds the coordinate for index indices[i]; an x-family
// variable for slot i is VarId i, a y-family variable is
// VarId indices.size() + i.

// gh_{indices[i]} as a polynomial in the x-family (shifted by
// var_offset): sum over slots j with indices[j] | indices[i] of
// indices[j] * x_j^{indices[i]/indices[j]}.
SparsePoly ghost_poly(const std::vector<long>& indices, std::size_t i, VarId var_offset);

// Ghost values of a coordinate vector, any coefficient ring.
std::vector<RingElem> ghost_values(const std::vector<long>& indices,
                                   const std::vector<RingElem>& coords);

// Solve n z_n = target_n - sum_{k|n, k<n in set} k z_k^{n/k} for values;
// each division must be exact in the ring (throws non_integral_ghost(n)).
std::vector<RingElem> ghost_invert_values(const std::vector<long>& indices,
                                          const std::vector<RingElem>& targets);

// The same recursion symbolically over Q.
std::vector<SparsePoly> ghost_invert_symbolic(const std::vector<long>& indices,
                                              const std::vector<SparsePoly>& targets);

enum class LawOp { sum, prod, neg };

enum class WittOp { add, sub, mul, neg };

// Coordinates of a op b over any coefficient ring in the enumeration.
// Torsion-free rings combine ghosts and invert directly; Z/p^N and F_p
// lift coordinates to Z, compute there, and reduce back, which
// evaluates the same integral universal law polynomials by naturality.
std::vector<RingElem> witt_coordinate_op(const RingSpec& ring,
                                         const std::vector<long>& indices, WittOp op,
                                         const std::vector<RingElem>& a,
                                         const std::vector<RingElem>* b);

// Coordinates of x op y (or -x) solved from ghost compatibility over Q.
std::vector<SparsePoly> derive_coordinate_law(const std::vector<long>& indices, LawOp op);

// Re-check gh_n(z) = gh_n(x) op gh_n(y) symbolically; throws
// certification_failure on mismatch.
void certify_ghost_compatibility(const std::vector<long>& indices,
                                 const std::vector<SparsePoly>& law, LawOp op);

// As above for an arbitrary ghost target list (sections, Frobenius).
void certify_ghost_targets(const std::vector<long>& indices,
                           const std::vector<SparsePoly>& law,
                           const std::vector<SparsePoly>& targets);

} // namespace witt
