#include "witt/artin_hasse.hpp"

#include <future>
#include <map>
#include <mutex>

namespace witt {

SubgroupCountSeries nh_coeffs(int h, long p, int depth) {
    if (h < 1) throw invalid_value("height must be >= 1");
    if (depth < 0) throw invalid_value("depth must be >= 0");
    if (!is_small_prime(p)) throw invalid_ring("p = " + std::to_string(p) + " is not a small prime");
    // expand 1/prod_{i=0}^{h-1} (1 - p^i T) by stacking the geometric
    // recurrences c[d] += p^i c[d-1]
    std::vector<mpz_class> c(static_cast<std::size_t>(depth) + 1, mpz_class(0));
    c[0] = 1;
    mpz_class pi(1);
    for (int i = 0; i < h; ++i) {
        for (int d = 1; d <= depth; ++d)
            c[static_cast<std::size_t>(d)] += pi * c[static_cast<std::size_t>(d - 1)];
        pi *= p;
    }
    return SubgroupCountSeries{h, p, std::move(c)};
}

RingElem nh_infinity(int h, long p, int precision) {
    if (h < 1) throw invalid_value("height must be >= 1");
    const RingSpec R = RingSpec::mod_prime_power(p, precision);
    mpz_class prod(1), pi(p);
    for (int i = 1; i < h; ++i) {
        prod *= (1 - pi);
        pi *= p;
    }
    return RingElem::of(R, prod).inverse(); // prod == 1 mod p, so a unit
}

ArtinHasseElement compute_artin_hasse(int h, long p, int trunc) {
    if (trunc < 1) throw invalid_value("truncation must be >= 1");
    const RingSpec Q = RingSpec::rationals();
    const int len = p_typical_length_for(p, trunc);
    const SubgroupCountSeries nh = nh_coeffs(h, p, len - 1);
    TruncSeries g = TruncSeries::zero(Q, trunc);
    long pd = 1;
    for (int d = 0; d < len; ++d) {
        g.set_coeff(static_cast<int>(pd),
                    RingElem(Q, mpq_class(nh.coeffs[static_cast<std::size_t>(d)]) / mpq_class(pd)));
        pd *= p;
    }
    TruncSeries series_q = series_exp(g);
    TruncSeries series = clear_to_plocal(series_q, p);
    BigWittVec big = BigWittVec::from_series(series);
    PWittVec pt = project(big, p, len);
    return ArtinHasseElement{h, p, trunc, std::move(series), std::move(big), std::move(pt)};
}

namespace {

std::mutex g_mu;
std::map<std::tuple<int, long, int>, std::shared_future<std::shared_ptr<const ArtinHasseElement>>>
    g_cache;

} // namespace

const ArtinHasseElement& artin_hasse(int h, long p, int trunc) {
    std::shared_future<std::shared_ptr<const ArtinHasseElement>> fut;
    std::promise<std::shared_ptr<const ArtinHasseElement>> pr;
    bool creator = false;
    {
        std::lock_guard<std::mutex> lk(g_mu);
        auto it = g_cache.find({h, p, trunc});
        if (it == g_cache.end()) {
            fut = pr.get_future().share();
            g_cache.emplace(std::make_tuple(h, p, trunc), fut);
            creator = true;
        } else {
            fut = it->second;
        }
    }
    if (creator) {
        try {
            pr.set_value(std::make_shared<const ArtinHasseElement>(compute_artin_hasse(h, p, trunc)));
        } catch (...) {
            pr.set_exception(std::current_exception());
        }
    }
    return *fut.get();
}

BigWittVec idempotent_e(long p, int trunc) {
    const ArtinHasseElement& ah1 = artin_hasse(1, p, trunc);
    return BigWittVec::one(ah1.big.ring(), trunc) - ah1.big;
}

AhCheckReport ah_identity_check(int h, long p, int trunc, Rng& rng, int samples) {
    AhCheckReport rep;
    rep.h = h;
    rep.p = p;
    rep.trunc = trunc;
    rep.samples = samples;
    const RingSpec Zp = RingSpec::p_local(p);
    const int len = p_typical_length_for(p, trunc);

    // (i) AH^1_p is the multiplicative identity of W_p
    const ArtinHasseElement& ah1 = artin_hasse(1, p, trunc);
    rep.height1_projection_is_one = (ah1.p_typical == PWittVec::one(p, Zp, len));
    if (!rep.height1_projection_is_one)
        rep.failures.push_back("AH^1 does not project to the identity of W_p");

    // (ii) the splitting square: j((AH^h_p) * project(a)) = AH^h_Z * a,
    // with ghost spectrum N^h_{p^k} gh_{p^k}(a) at p-powers, 0 elsewhere
    const ArtinHasseElement& ah = artin_hasse(h, p, trunc);
    const SubgroupCountSeries nh = nh_coeffs(h, p, len - 1);
    bool square_ok = true;
    for (int s = 0; s < samples && square_ok; ++s) {
        BigWittVec a(Zp, rng.coords(Zp, trunc, 5));
        BigWittVec rhs = ah.big * a;
        BigWittVec lhs = section_j(ah.p_typical * project(a, p, len), trunc);
        if (lhs != rhs) {
            square_ok = false;
            rep.failures.push_back("splitting square mismatch at sample " + std::to_string(s));
            break;
        }
        long n = 1;
        for (int k = 0; k < len; ++k) {
            if (rhs.ghost(n) != RingElem::of(Zp, nh.coeffs[static_cast<std::size_t>(k)]) * a.ghost(n)) {
                square_ok = false;
                rep.failures.push_back("ghost spectrum mismatch at p^" + std::to_string(k));
                break;
            }
            n *= p;
        }
        for (long m = 1; m <= trunc && square_ok; ++m) {
            long mm = m;
            while (mm % p == 0) mm /= p;
            if (mm == 1) continue; // p-power
            if (!rhs.ghost(m).is_zero()) {
                square_ok = false;
                rep.failures.push_back("ghost off p-powers is nonzero at " + std::to_string(m));
            }
        }
    }
    rep.splitting_square_commutes = square_ok;

    // (iii) multiplication by AH^h_p is invertible
    try {
        PWittVec inv = ah.p_typical.inverse();
        rep.multiplication_invertible = (ah.p_typical * inv == PWittVec::one(p, Zp, len));
        if (!rep.multiplication_invertible)
            rep.failures.push_back("AH^h_p inverse failed to verify");
    } catch (const error& e) {
        rep.multiplication_invertible = false;
        rep.failures.push_back(std::string("AH^h_p is not invertible: ") + e.what());
    }
    return rep;
}

RingElem ah_image_in_padics(int h, long p, int d) {
    if (d < 0) throw invalid_value("depth must be >= 0");
    // The p-typical coordinates of AH^h over Z_(p) are recovered by
    // ghost inversion from the known ghost values N^h_{p^k}; reduce mod
    // p and apply the W_p(F_p) = Z/p^{d+1} isomorphism.
    const RingSpec Zp = RingSpec::p_local(p);
    const SubgroupCountSeries nh = nh_coeffs(h, p, d);
    std::vector<RingElem> gh;
    gh.reserve(static_cast<std::size_t>(d) + 1);
    for (const auto& c : nh.coeffs) gh.push_back(RingElem::of(Zp, c));
    PWittVec ahp = PWittVec::from_ghost(p, Zp, gh);
    return to_padic(ahp.map_ring(RingSpec::prime_field(p)));
}

} // namespace witt
