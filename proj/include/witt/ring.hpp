#pragma once

#include <gmpxx.h>

#include <string>

#include "witt/error.hpp"

namespace witt {

// The coefficient rings are a closed enumerated set: Z, Q, Z_(p),
// Z/p^N and F_p.  Every element is kept in canonical reduced form
// (fractions reduced, residues in [0, p^N)), so equality is structural.

enum class RingKind {
    integers,          // Z
    rationals,         // Q
    p_local,           // Z_(p): fractions with denominator prime to p
    mod_prime_power,   // Z/p^N
    prime_field,       // F_p
};

// Deterministic primality check for the primes in scope (p < 2^16).
bool is_small_prime(long p);

class RingSpec {
public:
    static RingSpec integers();
    static RingSpec rationals();
    static RingSpec p_local(long p);
    static RingSpec mod_prime_power(long p, int n);
    static RingSpec prime_field(long p);

    RingKind kind() const { return kind_; }
    long p() const;
    int precision() const;               // N for Z/p^N, 1 for F_p
    const mpz_class& modulus() const;    // p^N for the modular kinds

    bool is_modular() const {
        return kind_ == RingKind::mod_prime_power || kind_ == RingKind::prime_field;
    }
    bool torsion_free() const {
        return kind_ == RingKind::integers || kind_ == RingKind::rationals
            || kind_ == RingKind::p_local;
    }
    // Rings where p-local rational coefficients can be evaluated.
    bool accepts_p_local(long p) const;

    std::string name() const;
    bool operator==(const RingSpec& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && n_ == o.n_;
    }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }

private:
    RingSpec(RingKind k, long p, int n);
    RingKind kind_;
    long p_ = 0;
    int n_ = 0;
    mpz_class modulus_; // 0 unless modular
};

class RingElem {
public:
    // Canonicalizes and validates: reduces the fraction, checks
    // denominator constraints, reduces modular residues into [0, p^N).
    RingElem(RingSpec ring, mpq_class value);

    static RingElem zero(const RingSpec& r) { return RingElem(r, mpq_class(0)); }
    static RingElem one(const RingSpec& r) { return RingElem(r, mpq_class(1)); }
    static RingElem of(const RingSpec& r, long v) { return RingElem(r, mpq_class(v)); }
    static RingElem of(const RingSpec& r, const mpz_class& v) { return RingElem(r, mpq_class(v)); }
    // Accepts "n" or "n/d".
    static RingElem parse(const RingSpec& r, const std::string& s);

    const RingSpec& ring() const { return ring_; }
    // Canonical value: the reduced fraction, or the residue with
    // denominator 1 for the modular kinds.
    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_unit() const;

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;

    // Exact division: field division over Q/F_p, divisibility over Z,
    // p-local exactness over Z_(p), unit division over Z/p^N.  Throws
    // non_exact_division when the quotient does not exist in the ring.
    RingElem div_exact(const RingElem& o) const;
    RingElem inverse() const; // throws not_a_unit(-1, ...)
    RingElem pow(unsigned long e) const;

    std::string str() const; // decimal, or "num/den"

    bool operator==(const RingElem& o) const { return ring_ == o.ring_ && v_ == o.v_; }
    bool operator!=(const RingElem& o) const { return !(*this == o); }

private:
    void require_same_ring(const RingElem& o) const;
    RingSpec ring_;
    mpq_class v_;
};

// The natural map between members of the enumerated family, when one
// exists (e.g. Z -> F_p, Z_(p) -> Z/p^N, Z/p^N -> Z/p^M for M <= N).
// Throws invalid_value when there is no such map, not_p_local when a
// denominator is divisible by p.
RingElem reduce_to(const RingElem& x, const RingSpec& target);

} // namespace witt
