#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "witt/error.hpp"

namespace witt {

// Finitely presented quotients of Z/p^N[a]: the relations include the
// constant p^N and a monic relation of top degree D that rewrites a^D
// below the degree bound, so the quotient is a finite Z-module
// presented by an integer lattice inside Z^D on the basis 1, a, ...,
// a^{D-1}.

struct QuotientPresentation {
    long p = 2;
    int modulus_exponent = 1;
    int degree_bound = 1;
    std::vector<std::vector<mpz_class>> relations; // coefficient arrays, c0 first
};

// Residue-field composition length of the quotient: assemble the
// a-stable relation lattice, take its Smith normal form, and sum the
// p-valuations of the invariant factors.
long length_over_fp(const QuotientPresentation& q);

// Reduce the relations mod p; the resulting ideal of F_p[a] must be
// generated by a single monomial a^n.  Returns n.
int mod_p_reduction(const QuotientPresentation& q);

// The three shipped height-2, p=2 presentations (depths 1..3).
std::vector<QuotientPresentation> builtin_height2_fixtures();

struct FixtureCheck {
    std::string name;
    long length = 0;
    long expected_length = 0;
    int mod_p_exponent = 0;
    int expected_exponent = 0;
    bool ok = false;
};

struct FixtureReport {
    std::vector<FixtureCheck> checks;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Verifies lengths against partial sums of the height-2 subgroup-count
// series, mod-p exponents against its coefficients, and the telescoping
// length differences.
FixtureReport verify_height2_suite(const std::vector<QuotientPresentation>& fixtures);
FixtureReport verify_height2_suite(); // builtin fixtures

} // namespace witt
