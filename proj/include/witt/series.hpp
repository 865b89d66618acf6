#pragma once

#include <vector>

#include "witt/ring.hpp"

namespace witt {

// Truncated formal power series: a series known modulo X^{N+1}, stored
// as exactly N+1 coefficients c_0..c_N.  Arithmetic never reads or
// writes above the truncation.

class TruncSeries {
public:
    TruncSeries(RingSpec ring, std::vector<RingElem> coeffs);
    static TruncSeries zero(const RingSpec& r, int trunc);
    static TruncSeries one(const RingSpec& r, int trunc);
    // all-zero series except c_k = value
    static TruncSeries monomial(const RingElem& value, int k, int trunc);

    const RingSpec& ring() const { return ring_; }
    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const RingElem& coeff(int i) const;
    const std::vector<RingElem>& coeffs() const { return c_; }
    void set_coeff(int i, const RingElem& v);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    bool operator==(const TruncSeries& o) const { return ring_ == o.ring_ && c_ == o.c_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

private:
    void require_compatible(const TruncSeries& o) const;
    RingSpec ring_;
    std::vector<RingElem> c_;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

// exp via the derivative recurrence (exp a)' = a' exp a, so each
// coefficient costs one division by its index; requires c_0 = 0.
TruncSeries series_exp(const TruncSeries& a);

// Inverse of series_exp on its domain; requires c_0 = 1.
TruncSeries series_log(const TruncSeries& a);

// Multiplicative inverse; requires c_0 a unit.
TruncSeries series_invert(const TruncSeries& a);

// Re-type rational coefficients as p-local rationals; fails with
// not_p_local(index, coefficient) if any denominator is divisible by p.
TruncSeries clear_to_plocal(const TruncSeries& a, long p);

} // namespace witt
