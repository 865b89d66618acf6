#include "witt/ring.hpp"

namespace witt {

bool is_small_prime(long p) {
    if (p < 2 || p >= (1L << 16)) return false;
    if (p % 2 == 0) return p == 2;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

RingSpec::RingSpec(RingKind k, long p, int n) : kind_(k), p_(p), n_(n) {
    if (kind_ == RingKind::p_local || kind_ == RingKind::mod_prime_power
        || kind_ == RingKind::prime_field) {
        if (!is_small_prime(p_))
            throw invalid_ring("p = " + std::to_string(p_) + " is not a prime below 2^16");
    }
    if (kind_ == RingKind::mod_prime_power) {
        if (n_ < 1) throw invalid_ring("precision exponent must be >= 1");
        mpz_ui_pow_ui(modulus_.get_mpz_t(), static_cast<unsigned long>(p_),
                      static_cast<unsigned long>(n_));
    } else if (kind_ == RingKind::prime_field) {
        n_ = 1;
        modulus_ = p_;
    }
}

RingSpec RingSpec::integers() { return RingSpec(RingKind::integers, 0, 0); }
RingSpec RingSpec::rationals() { return RingSpec(RingKind::rationals, 0, 0); }
RingSpec RingSpec::p_local(long p) { return RingSpec(RingKind::p_local, p, 0); }
RingSpec RingSpec::mod_prime_power(long p, int n) { return RingSpec(RingKind::mod_prime_power, p, n); }
RingSpec RingSpec::prime_field(long p) { return RingSpec(RingKind::prime_field, p, 1); }

long RingSpec::p() const {
    if (kind_ == RingKind::integers || kind_ == RingKind::rationals)
        throw invalid_ring("ring " + name() + " has no prime parameter");
    return p_;
}

int RingSpec::precision() const {
    if (!is_modular()) throw invalid_ring("ring " + name() + " has no precision exponent");
    return n_;
}

const mpz_class& RingSpec::modulus() const {
    if (!is_modular()) throw invalid_ring("ring " + name() + " has no modulus");
    return modulus_;
}

bool RingSpec::accepts_p_local(long p) const {
    switch (kind_) {
        case RingKind::rationals: return true;
        case RingKind::p_local:
        case RingKind::mod_prime_power:
        case RingKind::prime_field: return p_ == p;
        case RingKind::integers: return false;
    }
    return false;
}

std::string RingSpec::name() const {
    switch (kind_) {
        case RingKind::integers: return "Z";
        case RingKind::rationals: return "Q";
        case RingKind::p_local: return "Z_(" + std::to_string(p_) + ")";
        case RingKind::mod_prime_power:
            return "Z/" + std::to_string(p_) + "^" + std::to_string(n_);
        case RingKind::prime_field: return "F_" + std::to_string(p_);
    }
    return "?";
}

RingElem::RingElem(RingSpec ring, mpq_class value) : ring_(std::move(ring)), v_(std::move(value)) {
    v_.canonicalize();
    switch (ring_.kind()) {
        case RingKind::rationals:
            break;
        case RingKind::integers:
            if (v_.get_den() != 1)
                throw invalid_value("not an integer: " + v_.get_str());
            break;
        case RingKind::p_local:
            if (mpz_divisible_ui_p(v_.get_den().get_mpz_t(),
                                   static_cast<unsigned long>(ring_.p())))
                throw not_p_local(-1, v_.get_str());
            break;
        case RingKind::mod_prime_power:
        case RingKind::prime_field: {
            mpz_class num = v_.get_num(), den = v_.get_den(), r;
            if (den != 1) {
                mpz_class inv;
                if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ring_.modulus().get_mpz_t()))
                    throw non_exact_division("denominator " + den.get_str()
                                             + " is not invertible in " + ring_.name());
                num *= inv;
            }
            mpz_mod(r.get_mpz_t(), num.get_mpz_t(), ring_.modulus().get_mpz_t());
            v_ = mpq_class(r);
            break;
        }
    }
}

RingElem RingElem::parse(const RingSpec& r, const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw invalid_value("cannot parse ring element: '" + s + "'");
    return RingElem(r, q);
}

void RingElem::require_same_ring(const RingElem& o) const {
    if (ring_ != o.ring_)
        throw ring_mismatch("ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
}

bool RingElem::is_unit() const {
    switch (ring_.kind()) {
        case RingKind::rationals: return !is_zero();
        case RingKind::integers: return v_ == 1 || v_ == -1;
        case RingKind::p_local:
            return !is_zero()
                && !mpz_divisible_ui_p(v_.get_num().get_mpz_t(),
                                       static_cast<unsigned long>(ring_.p()));
        case RingKind::mod_prime_power:
        case RingKind::prime_field:
            return !mpz_divisible_ui_p(v_.get_num().get_mpz_t(),
                                       static_cast<unsigned long>(ring_.p()));
    }
    return false;
}

RingElem RingElem::operator+(const RingElem& o) const {
    require_same_ring(o);
    if (ring_.is_modular()) {
        mpz_class s = v_.get_num() + o.v_.get_num(), r;
        mpz_mod(r.get_mpz_t(), s.get_mpz_t(), ring_.modulus().get_mpz_t());
        RingElem out(*this);
        out.v_ = mpq_class(r);
        return out;
    }
    RingElem out(*this);
    out.v_ = v_ + o.v_;
    return out;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
    require_same_ring(o);
    if (ring_.is_modular()) {
        mpz_class s = v_.get_num() * o.v_.get_num(), r;
        mpz_mod(r.get_mpz_t(), s.get_mpz_t(), ring_.modulus().get_mpz_t());
        RingElem out(*this);
        out.v_ = mpq_class(r);
        return out;
    }
    RingElem out(*this);
    out.v_ = v_ * o.v_;
    return out;
}

RingElem RingElem::operator-() const {
    if (ring_.is_modular()) {
        mpz_class s = -v_.get_num(), r;
        mpz_mod(r.get_mpz_t(), s.get_mpz_t(), ring_.modulus().get_mpz_t());
        RingElem out(*this);
        out.v_ = mpq_class(r);
        return out;
    }
    RingElem out(*this);
    out.v_ = -v_;
    return out;
}

RingElem RingElem::div_exact(const RingElem& o) const {
    require_same_ring(o);
    switch (ring_.kind()) {
        case RingKind::rationals:
            if (o.is_zero()) throw non_exact_division("division by zero in Q");
            return RingElem(ring_, v_ / o.v_);
        case RingKind::integers: {
            if (o.is_zero()) throw non_exact_division("division by zero in Z");
            mpz_class q;
            if (!mpz_divisible_p(v_.get_num().get_mpz_t(), o.v_.get_num().get_mpz_t()))
                throw non_exact_division(v_.get_str() + " not divisible by " + o.v_.get_str() + " in Z");
            mpz_divexact(q.get_mpz_t(), v_.get_num().get_mpz_t(), o.v_.get_num().get_mpz_t());
            return RingElem(ring_, mpq_class(q));
        }
        case RingKind::p_local: {
            if (o.is_zero()) throw non_exact_division("division by zero in " + ring_.name());
            mpq_class q = v_ / o.v_;
            q.canonicalize();
            if (mpz_divisible_ui_p(q.get_den().get_mpz_t(),
                                   static_cast<unsigned long>(ring_.p())))
                throw non_exact_division("quotient " + q.get_str() + " is not p-local for p = "
                                         + std::to_string(ring_.p()));
            return RingElem(ring_, q);
        }
        case RingKind::mod_prime_power:
        case RingKind::prime_field: {
            if (!o.is_unit())
                throw non_exact_division("division by non-unit " + o.str() + " in " + ring_.name());
            return *this * o.inverse();
        }
    }
    throw non_exact_division("unreachable");
}

RingElem RingElem::inverse() const {
    if (!is_unit()) throw not_a_unit(-1, str() + " in " + ring_.name());
    if (ring_.is_modular()) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), ring_.modulus().get_mpz_t());
        RingElem out(*this);
        out.v_ = mpq_class(inv);
        return out;
    }
    return RingElem(ring_, 1 / v_);
}

RingElem RingElem::pow(unsigned long e) const {
    if (e == 0) return one(ring_);
    if (ring_.is_modular()) {
        mpz_class r, base = v_.get_num(), exp(static_cast<unsigned long>(e));
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), ring_.modulus().get_mpz_t());
        RingElem out(*this);
        out.v_ = mpq_class(r);
        return out;
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_class q(n);
    q /= mpq_class(d);
    RingElem out(*this);
    out.v_ = q;
    return out;
}

std::string RingElem::str() const { return v_.get_str(); }

RingElem reduce_to(const RingElem& x, const RingSpec& target) {
    if (x.ring() == target) return x;
    const RingKind from = x.ring().kind(), to = target.kind();
    switch (to) {
        case RingKind::integers:
            throw invalid_value("no natural map from " + x.ring().name() + " to Z");
        case RingKind::rationals:
            if (from == RingKind::integers || from == RingKind::p_local)
                return RingElem(target, x.value());
            throw invalid_value("no natural map from " + x.ring().name() + " to Q");
        case RingKind::p_local: {
            if (from == RingKind::integers) return RingElem(target, x.value());
            if (from == RingKind::rationals) {
                if (mpz_divisible_ui_p(x.value().get_den().get_mpz_t(),
                                       static_cast<unsigned long>(target.p())))
                    throw not_p_local(-1, x.value().get_str());
                return RingElem(target, x.value());
            }
            throw invalid_value("no natural map from " + x.ring().name() + " to " + target.name());
        }
        case RingKind::mod_prime_power:
        case RingKind::prime_field: {
            if (from == RingKind::integers) return RingElem(target, x.value());
            if (from == RingKind::rationals || from == RingKind::p_local) {
                if (mpz_divisible_ui_p(x.value().get_den().get_mpz_t(),
                                       static_cast<unsigned long>(target.p())))
                    throw not_p_local(-1, x.value().get_str());
                return RingElem(target, x.value());
            }
            if (from == RingKind::mod_prime_power || from == RingKind::prime_field) {
                if (x.ring().p() != target.p())
                    throw invalid_value("no natural map " + x.ring().name() + " -> " + target.name());
                if (x.ring().precision() < target.precision())
                    throw invalid_value("no natural map " + x.ring().name() + " -> " + target.name()
                                        + " (precision would increase)");
                return RingElem(target, x.value());
            }
            break;
        }
    }
    throw invalid_value("no natural map from " + x.ring().name() + " to " + target.name());
}

} // namespace witt
