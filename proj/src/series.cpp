#include "witt/series.hpp"

namespace witt {

TruncSeries::TruncSeries(RingSpec ring, std::vector<RingElem> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
    if (c_.empty()) throw invalid_value("series needs at least the constant coefficient");
    for (const auto& x : c_)
        if (x.ring() != ring_) throw ring_mismatch("series coefficient ring mismatch");
}

TruncSeries TruncSeries::zero(const RingSpec& r, int trunc) {
    if (trunc < 0) throw invalid_value("negative truncation");
    return TruncSeries(r, std::vector<RingElem>(static_cast<std::size_t>(trunc) + 1,
                                                RingElem::zero(r)));
}

TruncSeries TruncSeries::one(const RingSpec& r, int trunc) {
    TruncSeries s = zero(r, trunc);
    s.c_[0] = RingElem::one(r);
    return s;
}

TruncSeries TruncSeries::monomial(const RingElem& value, int k, int trunc) {
    TruncSeries s = zero(value.ring(), trunc);
    if (k < 0 || k > trunc) throw index_out_of_range("monomial degree outside truncation");
    s.c_[static_cast<std::size_t>(k)] = value;
    return s;
}

const RingElem& TruncSeries::coeff(int i) const {
    if (i < 0 || i > trunc()) throw index_out_of_range("series coefficient index " + std::to_string(i));
    return c_[static_cast<std::size_t>(i)];
}

void TruncSeries::set_coeff(int i, const RingElem& v) {
    if (i < 0 || i > trunc()) throw index_out_of_range("series coefficient index " + std::to_string(i));
    if (v.ring() != ring_) throw ring_mismatch("series coefficient ring mismatch");
    c_[static_cast<std::size_t>(i)] = v;
}

void TruncSeries::require_compatible(const TruncSeries& o) const {
    if (ring_ != o.ring_) throw ring_mismatch("series ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
    if (trunc() != o.trunc()) throw invalid_value("series truncation mismatch");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    require_compatible(o);
    TruncSeries r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    require_compatible(o);
    TruncSeries r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    require_compatible(o);
    TruncSeries r = zero(ring_, trunc());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    return r;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries series_exp(const TruncSeries& a) {
    if (!a.coeff(0).is_zero())
        throw nonzero_constant_term("series_exp needs constant term 0, got " + a.coeff(0).str());
    const int n = a.trunc();
    const RingSpec& R = a.ring();
    TruncSeries e = TruncSeries::one(R, n);
    for (int m = 1; m <= n; ++m) {
        RingElem acc = RingElem::zero(R);
        for (int k = 1; k <= m; ++k) {
            if (a.coeff(k).is_zero()) continue;
            acc = acc + RingElem::of(R, k) * a.coeff(k) * e.coeff(m - k);
        }
        e.set_coeff(m, acc.div_exact(RingElem::of(R, m)));
    }
    return e;
}

TruncSeries series_log(const TruncSeries& a) {
    if (!a.coeff(0).is_one())
        throw nonunit_constant_term("series_log needs constant term 1, got " + a.coeff(0).str());
    const int n = a.trunc();
    const RingSpec& R = a.ring();
    TruncSeries l = TruncSeries::zero(R, n);
    // a' = l' a  =>  m a_m = sum_{k=1..m} k l_k a_{m-k}
    for (int m = 1; m <= n; ++m) {
        RingElem acc = RingElem::of(R, m) * a.coeff(m);
        for (int k = 1; k < m; ++k) {
            if (l.coeff(k).is_zero() || a.coeff(m - k).is_zero()) continue;
            acc = acc - RingElem::of(R, k) * l.coeff(k) * a.coeff(m - k);
        }
        l.set_coeff(m, acc.div_exact(RingElem::of(R, m)));
    }
    return l;
}

TruncSeries series_invert(const TruncSeries& a) {
    if (!a.coeff(0).is_unit())
        throw nonunit_constant_term("series_invert needs a unit constant term, got " + a.coeff(0).str());
    const int n = a.trunc();
    const RingSpec& R = a.ring();
    TruncSeries b = TruncSeries::zero(R, n);
    const RingElem c0inv = a.coeff(0).inverse();
    b.set_coeff(0, c0inv);
    for (int m = 1; m <= n; ++m) {
        RingElem acc = RingElem::zero(R);
        for (int k = 1; k <= m; ++k) {
            if (a.coeff(k).is_zero() || b.coeff(m - k).is_zero()) continue;
            acc = acc + a.coeff(k) * b.coeff(m - k);
        }
        b.set_coeff(m, -(acc * c0inv));
    }
    return b;
}

TruncSeries clear_to_plocal(const TruncSeries& a, long p) {
    if (a.ring().kind() != RingKind::rationals)
        throw invalid_value("clear_to_plocal expects rational coefficients");
    const RingSpec target = RingSpec::p_local(p);
    std::vector<RingElem> out;
    out.reserve(static_cast<std::size_t>(a.trunc()) + 1);
    for (int i = 0; i <= a.trunc(); ++i) {
        const mpq_class& q = a.coeff(i).value();
        if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
            throw not_p_local(i, q.get_str());
        out.emplace_back(target, q);
    }
    return TruncSeries(target, std::move(out));
}

} // namespace witt
