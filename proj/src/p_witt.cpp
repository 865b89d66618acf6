#include "witt/p_witt.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <mutex>

#include "law_io.hpp"

namespace witt {

std::vector<long> p_power_indices(long p, int len) {
    if (!is_small_prime(p)) throw invalid_ring("p = " + std::to_string(p) + " is not a small prime");
    if (len < 1) throw invalid_value("p-typical length must be >= 1");
    std::vector<long> idx;
    idx.reserve(static_cast<std::size_t>(len));
    long v = 1;
    for (int k = 0; k < len; ++k) {
        idx.push_back(v);
        if (k + 1 < len) {
            if (v > (1L << 20) / p)
                throw invalid_value("p-power index " + std::to_string(v) + "*" + std::to_string(p)
                                    + " exceeds the supported range at length " + std::to_string(len));
            v *= p;
        }
    }
    return idx;
}

int p_typical_length_for(long p, int trunc) {
    int len = 0;
    long v = 1;
    while (v <= trunc) {
        ++len;
        if (v > trunc / p) break;
        v *= p;
    }
    return len;
}

namespace {

std::vector<long> slot_labels(int len) {
    std::vector<long> l;
    for (int k = 0; k < len; ++k) l.push_back(k);
    return l;
}

std::mutex g_mu;
std::map<std::pair<long, int>, std::shared_future<std::shared_ptr<const PTypicalLaw>>> g_law_cache;
std::map<std::pair<long, int>, std::shared_future<std::shared_ptr<const SectionLaw>>> g_section_cache;

} // namespace

PTypicalLaw derive_p_typical_law(long p, int len) {
    const auto idx = p_power_indices(p, len);
    // The expanded coordinate polynomials hold every monomial of ghost
    // weight p^{len-1}, which explodes fast; arithmetic never needs
    // them (it runs the value-level recursion), so refuse rather than
    // thrash.
    if (idx.back() > 64)
        throw cap_exceeded("symbolic p-typical law cap: top index p^{len-1} = "
                           + std::to_string(idx.back())
                           + " > 64 (coordinate arithmetic does not need the expanded laws)");
    PTypicalLaw law;
    law.p = p;
    law.len = len;
    law.sum = derive_coordinate_law(idx, LawOp::sum);
    law.prod = derive_coordinate_law(idx, LawOp::prod);
    law.neg = derive_coordinate_law(idx, LawOp::neg);
    for (const auto* polys : {&law.sum, &law.prod, &law.neg})
        for (std::size_t k = 0; k < polys->size(); ++k)
            if (!(*polys)[k].integral_coefficients())
                throw integrality_failure("p-typical law coordinate z_" + std::to_string(k)
                                          + " has a non-integer coefficient");
    certify_ghost_compatibility(idx, law.sum, LawOp::sum);
    certify_ghost_compatibility(idx, law.prod, LawOp::prod);
    certify_ghost_compatibility(idx, law.neg, LawOp::neg);
    law.integrality_certificate = true;
    return law;
}

std::string p_typical_law_cache_file(long p, int len) {
    return "pwitt-laws-p" + std::to_string(p) + "-len" + std::to_string(len) + ".txt";
}

void save_p_typical_law(const PTypicalLaw& law, const std::string& path) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw invalid_value("cannot open law cache file for writing: " + path);
    const auto labels = slot_labels(law.len);
    os << "pwitt-laws p=" << law.p << " len=" << law.len << "\n";
    detail::write_poly_lines(os, "sum z", law.sum, labels, labels);
    detail::write_poly_lines(os, "prod z", law.prod, labels, labels);
    detail::write_poly_lines(os, "neg z", law.neg, labels, labels);
    os << "end\n";
}

PTypicalLaw load_p_typical_law(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw invalid_value("cannot open law cache file: " + path);
    std::string header;
    std::getline(is, header);
    long p = 0;
    int len = 0;
    if (sscanf(header.c_str(), "pwitt-laws p=%ld len=%d", &p, &len) != 2)
        throw certification_failure("bad p-typical law cache header in " + path);
    const auto labels = slot_labels(len);
    PTypicalLaw law;
    law.p = p;
    law.len = len;
    law.sum.assign(labels.size(), SparsePoly());
    law.prod.assign(labels.size(), SparsePoly());
    law.neg.assign(labels.size(), SparsePoly());
    std::vector<int> seen(3 * labels.size(), 0);
    std::string line;
    bool ended = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line == "end") { ended = true; break; }
        std::string tag;
        long label = 0;
        SparsePoly poly;
        if (!detail::parse_poly_line(line, tag, label, poly, labels))
            throw certification_failure("unparsable law cache line: " + line);
        if (label < 0 || label >= len)
            throw certification_failure("law cache coordinate out of range: " + line);
        const std::size_t k = static_cast<std::size_t>(label);
        if (tag == "sum z") { law.sum[k] = poly; seen[k] = 1; }
        else if (tag == "prod z") { law.prod[k] = poly; seen[labels.size() + k] = 1; }
        else if (tag == "neg z") { law.neg[k] = poly; seen[2 * labels.size() + k] = 1; }
        else throw certification_failure("unknown law cache tag: " + tag);
    }
    if (!ended) throw certification_failure("law cache file truncated: " + path);
    for (int s : seen)
        if (!s) throw certification_failure("law cache misses a coordinate: " + path);
    const auto idx = p_power_indices(p, len);
    for (const auto* polys : {&law.sum, &law.prod, &law.neg})
        for (const auto& q : *polys)
            if (!q.integral_coefficients())
                throw integrality_failure("law cache holds a non-integer coefficient");
    certify_ghost_compatibility(idx, law.sum, LawOp::sum);
    certify_ghost_compatibility(idx, law.prod, LawOp::prod);
    certify_ghost_compatibility(idx, law.neg, LawOp::neg);
    law.integrality_certificate = true;
    return law;
}

const PTypicalLaw& p_typical_law(long p, int len) {
    std::shared_future<std::shared_ptr<const PTypicalLaw>> fut;
    std::promise<std::shared_ptr<const PTypicalLaw>> pr;
    bool creator = false;
    {
        std::lock_guard<std::mutex> lk(g_mu);
        auto it = g_law_cache.find({p, len});
        if (it == g_law_cache.end()) {
            fut = pr.get_future().share();
            g_law_cache.emplace(std::make_pair(p, len), fut);
            creator = true;
        } else {
            fut = it->second;
        }
    }
    if (creator) {
        try {
            const std::string dir = law_cache_dir();
            const std::string path = dir.empty() ? "" : dir + "/" + p_typical_law_cache_file(p, len);
            if (!path.empty() && std::filesystem::exists(path))
                pr.set_value(std::make_shared<const PTypicalLaw>(load_p_typical_law(path)));
            else
                pr.set_value(std::make_shared<const PTypicalLaw>(derive_p_typical_law(p, len)));
        } catch (...) {
            pr.set_exception(std::current_exception());
        }
    }
    return *fut.get();
}

namespace {

bool is_p_power(long m, long p, int* exp = nullptr) {
    int e = 0;
    while (m % p == 0) { m /= p; ++e; }
    if (exp) *exp = e;
    return m == 1;
}

} // namespace

SectionLaw derive_section_law(long p, int trunc) {
    const int len = p_typical_length_for(p, trunc);
    const auto pidx = p_power_indices(p, len);
    std::vector<long> out_idx;
    for (long n = 1; n <= trunc; ++n) out_idx.push_back(n);
    std::vector<SparsePoly> targets;
    targets.reserve(out_idx.size());
    for (long n = 1; n <= trunc; ++n) {
        int e = 0;
        if (is_p_power(n, p, &e))
            targets.push_back(ghost_poly(pidx, static_cast<std::size_t>(e), 0));
        else
            targets.push_back(SparsePoly());
    }
    SectionLaw law;
    law.p = p;
    law.len = len;
    law.trunc = trunc;
    law.coords = ghost_invert_symbolic(out_idx, targets);
    for (std::size_t i = 0; i < law.coords.size(); ++i) {
        if (!law.coords[i].p_local_coefficients(p))
            throw not_p_local(static_cast<long>(i + 1), "section coordinate s_" + std::to_string(i + 1));
        for (const auto& d : law.coords[i].denominators())
            if (d != 1) law.observed_denominators.push_back(d);
    }
    std::sort(law.observed_denominators.begin(), law.observed_denominators.end());
    law.observed_denominators.erase(
        std::unique(law.observed_denominators.begin(), law.observed_denominators.end()),
        law.observed_denominators.end());
    certify_ghost_targets(out_idx, law.coords, targets);
    law.plocal_certificate = true;
    return law;
}

std::string section_law_cache_file(long p, int trunc) {
    return "section-polys-p" + std::to_string(p) + "-N" + std::to_string(trunc) + ".txt";
}

void save_section_law(const SectionLaw& law, const std::string& path) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw invalid_value("cannot open section cache file for writing: " + path);
    std::vector<long> line_labels;
    for (long n = 1; n <= law.trunc; ++n) line_labels.push_back(n);
    os << "section-polys p=" << law.p << " len=" << law.len << " trunc=" << law.trunc << "\n";
    detail::write_poly_lines(os, "s", law.coords, line_labels, slot_labels(law.len));
    os << "end\n";
}

SectionLaw load_section_law(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw invalid_value("cannot open section cache file: " + path);
    std::string header;
    std::getline(is, header);
    long p = 0;
    int len = 0, trunc = 0;
    if (sscanf(header.c_str(), "section-polys p=%ld len=%d trunc=%d", &p, &len, &trunc) != 3)
        throw certification_failure("bad section cache header in " + path);
    if (len != p_typical_length_for(p, trunc))
        throw certification_failure("section cache length/truncation mismatch in " + path);
    const auto labels = slot_labels(len);
    SectionLaw law;
    law.p = p;
    law.len = len;
    law.trunc = trunc;
    law.coords.assign(static_cast<std::size_t>(trunc), SparsePoly());
    std::vector<bool> seen(static_cast<std::size_t>(trunc), false);
    std::string line;
    bool ended = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line == "end") { ended = true; break; }
        std::string tag;
        long label = 0;
        SparsePoly poly;
        if (!detail::parse_poly_line(line, tag, label, poly, labels))
            throw certification_failure("unparsable section cache line: " + line);
        if (tag != "s" || label < 1 || label > trunc)
            throw certification_failure("bad section cache line: " + line);
        law.coords[static_cast<std::size_t>(label - 1)] = poly;
        seen[static_cast<std::size_t>(label - 1)] = true;
    }
    if (!ended) throw certification_failure("section cache file truncated: " + path);
    for (bool s : seen)
        if (!s) throw certification_failure("section cache misses a coordinate: " + path);
    const auto pidx = p_power_indices(p, len);
    std::vector<long> out_idx;
    std::vector<SparsePoly> targets;
    for (long n = 1; n <= trunc; ++n) {
        out_idx.push_back(n);
        int e = 0;
        targets.push_back(is_p_power(n, p, &e)
                              ? ghost_poly(pidx, static_cast<std::size_t>(e), 0)
                              : SparsePoly());
    }
    for (std::size_t i = 0; i < law.coords.size(); ++i) {
        if (!law.coords[i].p_local_coefficients(p))
            throw not_p_local(static_cast<long>(i + 1), "section coordinate s_" + std::to_string(i + 1));
        for (const auto& d : law.coords[i].denominators())
            if (d != 1) law.observed_denominators.push_back(d);
    }
    std::sort(law.observed_denominators.begin(), law.observed_denominators.end());
    law.observed_denominators.erase(
        std::unique(law.observed_denominators.begin(), law.observed_denominators.end()),
        law.observed_denominators.end());
    certify_ghost_targets(out_idx, law.coords, targets);
    law.plocal_certificate = true;
    return law;
}

const SectionLaw& section_law(long p, int trunc) {
    std::shared_future<std::shared_ptr<const SectionLaw>> fut;
    std::promise<std::shared_ptr<const SectionLaw>> pr;
    bool creator = false;
    {
        std::lock_guard<std::mutex> lk(g_mu);
        auto it = g_section_cache.find({p, trunc});
        if (it == g_section_cache.end()) {
            fut = pr.get_future().share();
            g_section_cache.emplace(std::make_pair(p, trunc), fut);
            creator = true;
        } else {
            fut = it->second;
        }
    }
    if (creator) {
        try {
            const std::string dir = law_cache_dir();
            const std::string path = dir.empty() ? "" : dir + "/" + section_law_cache_file(p, trunc);
            if (!path.empty() && std::filesystem::exists(path))
                pr.set_value(std::make_shared<const SectionLaw>(load_section_law(path)));
            else
                pr.set_value(std::make_shared<const SectionLaw>(derive_section_law(p, trunc)));
        } catch (...) {
            pr.set_exception(std::current_exception());
        }
    }
    return *fut.get();
}

PWittVec::PWittVec(long p, RingSpec ring, std::vector<RingElem> coords)
    : p_(p), ring_(std::move(ring)), a_(std::move(coords)) {
    if (!is_small_prime(p_)) throw invalid_ring("p = " + std::to_string(p_) + " is not a small prime");
    if (a_.empty()) throw invalid_value("p-typical Witt vector needs length >= 1");
    for (const auto& c : a_)
        if (c.ring() != ring_) throw ring_mismatch("Witt coordinate ring mismatch");
}

PWittVec PWittVec::zero(long p, const RingSpec& r, int len) {
    if (len < 1) throw invalid_value("length must be >= 1");
    return PWittVec(p, r, std::vector<RingElem>(static_cast<std::size_t>(len), RingElem::zero(r)));
}

PWittVec PWittVec::one(long p, const RingSpec& r, int len) {
    return teichmuller(p, RingElem::one(r), len);
}

PWittVec PWittVec::teichmuller(long p, const RingElem& a, int len) {
    PWittVec w = zero(p, a.ring(), len);
    w.a_[0] = a;
    return w;
}

const RingElem& PWittVec::coord(int k) const {
    if (k < 0 || k >= length())
        throw index_out_of_range("p-typical coordinate index " + std::to_string(k));
    return a_[static_cast<std::size_t>(k)];
}

RingElem PWittVec::ghost(int k) const {
    if (k < 0 || k >= length()) throw index_out_of_range("ghost exponent " + std::to_string(k));
    // gh_{p^k} = sum_{j=0}^{k} p^j a_j^{p^{k-j}}
    RingElem acc = RingElem::zero(ring_);
    mpz_class pj(1);
    for (int j = 0; j <= k; ++j) {
        unsigned long e = 1;
        for (int t = 0; t < k - j; ++t) e *= static_cast<unsigned long>(p_);
        acc = acc + RingElem::of(ring_, pj) * a_[static_cast<std::size_t>(j)].pow(e);
        pj *= p_;
    }
    return acc;
}

std::vector<RingElem> PWittVec::ghosts() const {
    return ghost_values(p_power_indices(p_, length()), a_);
}

void PWittVec::require_compatible(const PWittVec& o) const {
    if (p_ != o.p_) throw ring_mismatch("p-typical prime mismatch");
    if (ring_ != o.ring_)
        throw ring_mismatch("Witt ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
    if (length() != o.length()) throw invalid_value("p-typical length mismatch");
}

PWittVec PWittVec::operator+(const PWittVec& o) const {
    require_compatible(o);
    return PWittVec(p_, ring_,
                    witt_coordinate_op(ring_, p_power_indices(p_, length()), WittOp::add, a_, &o.a_));
}

PWittVec PWittVec::operator-(const PWittVec& o) const {
    require_compatible(o);
    return PWittVec(p_, ring_,
                    witt_coordinate_op(ring_, p_power_indices(p_, length()), WittOp::sub, a_, &o.a_));
}

PWittVec PWittVec::operator*(const PWittVec& o) const {
    require_compatible(o);
    return PWittVec(p_, ring_,
                    witt_coordinate_op(ring_, p_power_indices(p_, length()), WittOp::mul, a_, &o.a_));
}

PWittVec PWittVec::operator-() const {
    return PWittVec(p_, ring_,
                    witt_coordinate_op(ring_, p_power_indices(p_, length()), WittOp::neg, a_, nullptr));
}

bool PWittVec::is_unit() const {
    for (int k = 0; k < length(); ++k)
        if (!ghost(k).is_unit()) return false;
    return true;
}

PWittVec PWittVec::inverse() const {
    const int len = length();
    std::vector<RingElem> gh;
    gh.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) {
        gh.push_back(ghost(k));
        if (!gh.back().is_unit()) throw not_a_unit(k, gh.back().str());
    }
    PWittVec b = zero(p_, ring_, len);
    const PWittVec e = one(p_, ring_, len);
    for (int k = 0; k < len; ++k) {
        PWittVec m = (*this) * b;
        b.a_[static_cast<std::size_t>(k)] =
            (e.coord(k) - m.coord(k)) * gh[static_cast<std::size_t>(k)].inverse();
    }
    if ((*this) * b != e)
        throw certification_failure("p-typical inverse failed verification by multiplication");
    return b;
}

PWittVec PWittVec::from_ghost(long p, const RingSpec& r, const std::vector<RingElem>& g) {
    if (!r.torsion_free())
        throw invalid_value("from_ghost needs a torsion-free coefficient ring, got " + r.name());
    if (g.empty()) throw invalid_value("from_ghost needs at least one ghost component");
    return PWittVec(p, r, ghost_invert_values(p_power_indices(p, static_cast<int>(g.size())), g));
}

PWittVec PWittVec::map_ring(const RingSpec& target) const {
    std::vector<RingElem> out;
    out.reserve(a_.size());
    for (const auto& c : a_) out.push_back(reduce_to(c, target));
    return PWittVec(p_, target, std::move(out));
}

PWittVec project(const BigWittVec& w, long p, int len) {
    const auto idx = p_power_indices(p, len);
    if (idx.back() > w.trunc())
        throw invalid_value("projection length " + std::to_string(len)
                            + " needs truncation >= " + std::to_string(idx.back()));
    std::vector<RingElem> coords;
    coords.reserve(idx.size());
    for (long i : idx) coords.push_back(w.coord(static_cast<int>(i)));
    return PWittVec(p, w.ring(), std::move(coords));
}

namespace {

void require_p_local_ring(const RingSpec& r, long p, const char* what) {
    const bool ok = (r.kind() == RingKind::p_local || r.kind() == RingKind::mod_prime_power
                     || r.kind() == RingKind::prime_field)
                    && r.p() == p;
    if (!ok)
        throw not_p_local_ring(std::string(what) + " needs a p-local coefficient ring for p = "
                               + std::to_string(p) + ", got " + r.name());
}

} // namespace

BigWittVec section_j(const PWittVec& a, int trunc) {
    const long p = a.prime();
    require_p_local_ring(a.ring(), p, "section_j");
    const int want = p_typical_length_for(p, trunc);
    if (a.length() != want)
        throw invalid_value("section_j needs length " + std::to_string(want)
                            + " at truncation " + std::to_string(trunc));
    // Work over Q with lifted coordinates, then validate p-locality and
    // land in the original ring.
    const RingSpec Q = RingSpec::rationals();
    std::vector<RingElem> lifted;
    lifted.reserve(a.coords().size());
    for (const auto& c : a.coords()) lifted.emplace_back(Q, c.value());
    std::vector<RingElem> gh = ghost_values(p_power_indices(p, a.length()), lifted);
    std::vector<long> out_idx;
    std::vector<RingElem> targets;
    for (long n = 1; n <= trunc; ++n) {
        out_idx.push_back(n);
        int e = 0;
        targets.push_back(is_p_power(n, p, &e) ? gh[static_cast<std::size_t>(e)]
                                               : RingElem::zero(Q));
    }
    std::vector<RingElem> s = ghost_invert_values(out_idx, targets);
    std::vector<RingElem> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        try {
            out.push_back(RingElem(a.ring(), s[i].value()));
        } catch (const not_p_local&) {
            throw not_p_local(static_cast<long>(i + 1), s[i].str());
        }
    }
    return BigWittVec(a.ring(), std::move(out));
}

PWittVec frobenius(const PWittVec& a) {
    const int len = a.length();
    if (len < 2) throw index_out_of_range("frobenius: length underflow");
    const long p = a.prime();
    const auto out_idx = p_power_indices(p, len - 1);
    if (a.ring().torsion_free()) {
        std::vector<RingElem> gh = a.ghosts();
        std::vector<RingElem> targets(gh.begin() + 1, gh.end());
        return PWittVec(p, a.ring(), ghost_invert_values(out_idx, targets));
    }
    // integral coordinates: lift to Z, solve there, reduce back
    const RingSpec Z = RingSpec::integers();
    std::vector<RingElem> lifted;
    for (const auto& c : a.coords()) lifted.push_back(RingElem::of(Z, c.num()));
    std::vector<RingElem> gh = ghost_values(p_power_indices(p, len), lifted);
    std::vector<RingElem> targets(gh.begin() + 1, gh.end());
    std::vector<RingElem> z = ghost_invert_values(out_idx, targets);
    std::vector<RingElem> out;
    for (const auto& c : z) out.push_back(reduce_to(c, a.ring()));
    return PWittVec(p, a.ring(), std::move(out));
}

PWittVec verschiebung(const PWittVec& a) {
    std::vector<RingElem> out;
    out.reserve(a.coords().size() + 1);
    out.push_back(RingElem::zero(a.ring()));
    for (const auto& c : a.coords()) out.push_back(c);
    return PWittVec(a.prime(), a.ring(), std::move(out));
}

RingElem tilde_ghost(const PWittVec& abar, int d, const RingSpec& lift_ring,
                     const CoordLift& lift) {
    const long p = abar.prime();
    if (abar.ring().kind() != RingKind::prime_field || abar.ring().p() != p)
        throw invalid_value("tilde_ghost needs coordinates over F_" + std::to_string(p));
    if (d < 0 || d >= abar.length())
        throw index_out_of_range("tilde_ghost level " + std::to_string(d) + " needs length >= "
                                 + std::to_string(d + 1));
    switch (lift_ring.kind()) {
        case RingKind::integers: break;
        case RingKind::p_local:
            if (lift_ring.p() != p) throw invalid_value("tilde_ghost lift ring prime mismatch");
            break;
        case RingKind::mod_prime_power:
            if (lift_ring.p() != p) throw invalid_value("tilde_ghost lift ring prime mismatch");
            if (lift_ring.precision() < d + 1)
                throw insufficient_precision("tilde_ghost needs modulus precision >= "
                                             + std::to_string(d + 1) + ", got "
                                             + std::to_string(lift_ring.precision()));
            break;
        default:
            throw invalid_value("tilde_ghost lift ring must be Z, Z_(p) or Z/p^M");
    }
    const RingSpec target = RingSpec::mod_prime_power(p, d + 1);
    const RingSpec Fp = RingSpec::prime_field(p);
    std::vector<RingElem> lifted;
    lifted.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        RingElem lk = lift ? lift(k, abar.coord(k)) : RingElem::of(lift_ring, abar.coord(k).num());
        if (lk.ring() != lift_ring) throw invalid_value("tilde_ghost lift returned a foreign ring");
        if (reduce_to(lk, Fp) != abar.coord(k))
            throw invalid_value("tilde_ghost lift does not reduce to the given coordinate");
        lifted.push_back(lk);
    }
    PWittVec wl(p, lift_ring, std::move(lifted));
    return reduce_to(wl.ghost(d), target);
}

RingElem to_padic(const PWittVec& a) {
    return tilde_ghost(a, a.length() - 1, RingSpec::integers());
}

PWittVec from_padic(const RingElem& r) {
    const RingSpec& R = r.ring();
    if (!R.is_modular()) throw invalid_value("from_padic needs a residue in Z/p^{d+1}");
    const long p = R.p();
    const int d = R.precision() - 1;
    const RingSpec Fp = RingSpec::prime_field(p);
    const mpz_class target = r.num();
    std::vector<RingElem> coords;
    std::vector<mpz_class> digits;
    mpz_class pk(1); // p^k
    for (int k = 0; k <= d; ++k) {
        // residual = target - sum_{j<k} p^j a_j^{p^{d-j}} must vanish mod p^k
        mpz_class acc(0), pj(1);
        for (int j = 0; j < k; ++j) {
            mpz_class t;
            unsigned long e = 1;
            for (int u = 0; u < d - j; ++u) e *= static_cast<unsigned long>(p);
            mpz_pow_ui(t.get_mpz_t(), digits[static_cast<std::size_t>(j)].get_mpz_t(), e);
            acc += pj * t;
            pj *= p;
        }
        mpz_class rem = target - acc, q, mod;
        if (!mpz_divisible_p(rem.get_mpz_t(), pk.get_mpz_t()))
            throw certification_failure("from_padic digit recursion failed");
        mpz_divexact(q.get_mpz_t(), rem.get_mpz_t(), pk.get_mpz_t());
        mpz_class digit;
        mpz_class pz(p);
        mpz_mod(digit.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
        digits.push_back(digit);
        coords.push_back(RingElem::of(Fp, digit));
        pk *= p;
    }
    PWittVec out(p, Fp, std::move(coords));
    if (to_padic(out) != reduce_to(r, RingSpec::mod_prime_power(p, d + 1)))
        throw certification_failure("from_padic round trip failed");
    return out;
}

namespace {

PWittVec p_eval_law(const std::vector<SparsePoly>& polys, const PWittVec& a, const PWittVec* b) {
    std::vector<RingElem> values = a.coords();
    if (b) values.insert(values.end(), b->coords().begin(), b->coords().end());
    std::vector<RingElem> out;
    out.reserve(polys.size());
    for (const auto& q : polys) out.push_back(q.eval(values, a.ring()));
    return PWittVec(a.prime(), a.ring(), std::move(out));
}

} // namespace

PWittVec p_add_via_law_polys(const PWittVec& a, const PWittVec& b) {
    const PTypicalLaw& law = p_typical_law(a.prime(), a.length());
    return p_eval_law(law.sum, a, &b);
}

PWittVec p_mul_via_law_polys(const PWittVec& a, const PWittVec& b) {
    const PTypicalLaw& law = p_typical_law(a.prime(), a.length());
    return p_eval_law(law.prod, a, &b);
}

BigWittVec section_via_law_polys(const PWittVec& a, int trunc) {
    require_p_local_ring(a.ring(), a.prime(), "section_via_law_polys");
    const SectionLaw& law = section_law(a.prime(), trunc);
    if (a.length() != law.len)
        throw invalid_value("section_via_law_polys needs length " + std::to_string(law.len));
    std::vector<RingElem> out;
    out.reserve(law.coords.size());
    for (const auto& q : law.coords) out.push_back(q.eval(a.coords(), a.ring()));
    return BigWittVec(a.ring(), std::move(out));
}

} // namespace witt
