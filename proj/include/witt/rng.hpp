#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "witt/ring.hpp"

namespace witt {

// Deterministic randomness for property checks and seeded CLI runs.
// Only the raw mt19937_64 stream is used (its output sequence is fixed
// by the standard), never std distribution objects, so identical seeds
// give identical values on every platform.

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next() { return g_(); }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // A small canonical element; magnitudes stay single-limb so nested
    // Witt products remain quick.
    RingElem element(const RingSpec& r, long magnitude = 9) {
        switch (r.kind()) {
            case RingKind::integers:
                return RingElem::of(r, range(-magnitude, magnitude));
            case RingKind::rationals: {
                long den = range(1, magnitude);
                return RingElem(r, mpq_class(range(-magnitude, magnitude), den));
            }
            case RingKind::p_local: {
                long den = range(1, magnitude);
                while (den % r.p() == 0) den = range(1, magnitude);
                return RingElem(r, mpq_class(range(-magnitude, magnitude), den));
            }
            case RingKind::mod_prime_power:
            case RingKind::prime_field: {
                mpz_class v;
                mpz_class m = r.modulus();
                // rejection-free: fold a 64-bit draw through the modulus
                mpz_class draw(static_cast<unsigned long>(next()));
                mpz_mod(v.get_mpz_t(), draw.get_mpz_t(), m.get_mpz_t());
                return RingElem::of(r, v);
            }
        }
        return RingElem::zero(r);
    }

    // Sparse coordinate vectors keep ghost values small at high
    // truncation; density is the percentage of nonzero slots.
    std::vector<RingElem> coords(const RingSpec& r, int n, long magnitude = 9,
                                 int density_pct = 60) {
        std::vector<RingElem> out;
        out.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (below(100) < static_cast<std::uint64_t>(density_pct))
                out.push_back(element(r, magnitude));
            else
                out.push_back(RingElem::zero(r));
        }
        return out;
    }

private:
    std::mt19937_64 g_;
};

} // namespace witt
