#pragma once

#include <stdexcept>
#include <string>

namespace witt {

// Base of everything thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Domain errors: invalid inputs or operations outside an operation's
// domain.  The CLI maps these to exit code 2.
struct domain_error : error {
    using error::error;
};

struct invalid_ring : domain_error {
    using domain_error::domain_error;
};

struct ring_mismatch : domain_error {
    using domain_error::domain_error;
};

struct invalid_value : domain_error {
    using domain_error::domain_error;
};

struct index_out_of_range : domain_error {
    using domain_error::domain_error;
};

struct nonzero_constant_term : domain_error {
    using domain_error::domain_error;
};

struct nonunit_constant_term : domain_error {
    using domain_error::domain_error;
};

struct non_exact_division : domain_error {
    using domain_error::domain_error;
};

// A coefficient that should lie in Z_(p) has p in its denominator.
// index < 0 means "not tied to a series position".
struct not_p_local : domain_error {
    long index;
    std::string coefficient;
    not_p_local(long idx, std::string coeff)
        : domain_error("coefficient" + (idx >= 0 ? " at index " + std::to_string(idx) : std::string())
                       + " is not p-local: " + coeff),
          index(idx), coefficient(std::move(coeff)) {}
};

// First failing ghost component of a would-be unit.  index is the ghost
// index (big Witt) or the exponent k of p^k (p-typical); index < 0 for a
// plain ring element.
struct not_a_unit : domain_error {
    long index;
    std::string ghost;
    not_a_unit(long idx, std::string gh)
        : domain_error(idx >= 0 ? "not a unit: ghost component " + std::to_string(idx) + " = " + gh
                                : "not a unit: " + gh),
          index(idx), ghost(std::move(gh)) {}
};

// Exact division by k failed during ghost inversion: the ghost tuple is
// not in the image of the coordinate map.
struct non_integral_ghost : domain_error {
    long index;
    explicit non_integral_ghost(long idx)
        : domain_error("ghost inversion: exact division failed at index " + std::to_string(idx)),
          index(idx) {}
};

struct cap_exceeded : domain_error {
    using domain_error::domain_error;
};

struct not_p_local_ring : domain_error {
    using domain_error::domain_error;
};

struct insufficient_precision : domain_error {
    using domain_error::domain_error;
};

struct not_monomial_ideal : domain_error {
    using domain_error::domain_error;
};

struct non_terminating_reduction : domain_error {
    using domain_error::domain_error;
};

// Verification errors: a mathematical identity that must hold failed to
// check out (law certification, cache re-certification, suite checks).
// The CLI maps these to exit code 3.
struct verification_error : error {
    using error::error;
};

struct integrality_failure : verification_error {
    using verification_error::verification_error;
};

struct certification_failure : verification_error {
    using verification_error::verification_error;
};

} // namespace witt
