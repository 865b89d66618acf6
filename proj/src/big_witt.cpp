#include "witt/big_witt.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <sstream>

#include "law_io.hpp"

namespace witt {

namespace {

std::vector<long> full_indices(int n) {
    std::vector<long> idx;
    idx.reserve(static_cast<std::size_t>(n));
    for (long k = 1; k <= n; ++k) idx.push_back(k);
    return idx;
}

std::mutex g_mu;
std::map<int, std::shared_future<std::shared_ptr<const UniversalWittLaw>>> g_cache;
std::string g_cache_dir;

} // namespace

void set_law_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lk(g_mu);
    g_cache_dir = dir;
}

std::string law_cache_dir() {
    std::lock_guard<std::mutex> lk(g_mu);
    return g_cache_dir;
}

std::string witt_law_cache_file(int trunc) {
    return "witt-laws-N" + std::to_string(trunc) + ".txt";
}

UniversalWittLaw derive_universal_witt_law(int trunc) {
    if (trunc < 1) throw invalid_value("law truncation must be >= 1");
    const auto idx = full_indices(trunc);
    UniversalWittLaw law;
    law.trunc = trunc;
    law.sum = derive_coordinate_law(idx, LawOp::sum);
    law.prod = derive_coordinate_law(idx, LawOp::prod);
    law.neg = derive_coordinate_law(idx, LawOp::neg);
    for (const auto* polys : {&law.sum, &law.prod, &law.neg})
        for (std::size_t i = 0; i < polys->size(); ++i)
            if (!(*polys)[i].integral_coefficients())
                throw integrality_failure("universal law coordinate z_" + std::to_string(i + 1)
                                          + " has a non-integer coefficient");
    certify_ghost_compatibility(idx, law.sum, LawOp::sum);
    certify_ghost_compatibility(idx, law.prod, LawOp::prod);
    certify_ghost_compatibility(idx, law.neg, LawOp::neg);
    law.integrality_certificate = true;
    return law;
}

void save_universal_witt_law(const UniversalWittLaw& law, const std::string& path) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw invalid_value("cannot open law cache file for writing: " + path);
    const auto idx = full_indices(law.trunc);
    os << "witt-laws trunc=" << law.trunc << "\n";
    detail::write_poly_lines(os, "sum z", law.sum, idx, idx);
    detail::write_poly_lines(os, "prod z", law.prod, idx, idx);
    detail::write_poly_lines(os, "neg z", law.neg, idx, idx);
    os << "end\n";
}

UniversalWittLaw load_universal_witt_law(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw invalid_value("cannot open law cache file: " + path);
    std::string header;
    std::getline(is, header);
    const std::string prefix = "witt-laws trunc=";
    if (header.rfind(prefix, 0) != 0)
        throw certification_failure("bad law cache header in " + path);
    const int trunc = std::stoi(header.substr(prefix.size()));
    const auto idx = full_indices(trunc);
    UniversalWittLaw law;
    law.trunc = trunc;
    law.sum.assign(idx.size(), SparsePoly());
    law.prod.assign(idx.size(), SparsePoly());
    law.neg.assign(idx.size(), SparsePoly());
    std::vector<bool> seen_sum(idx.size(), false), seen_prod(idx.size(), false),
        seen_neg(idx.size(), false);
    std::string line;
    bool ended = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line == "end") { ended = true; break; }
        std::string tag;
        long label = 0;
        SparsePoly poly;
        if (!detail::parse_poly_line(line, tag, label, poly, idx))
            throw certification_failure("unparsable law cache line: " + line);
        if (label < 1 || label > trunc)
            throw certification_failure("law cache coordinate out of range: " + line);
        const std::size_t slot = static_cast<std::size_t>(label - 1);
        if (tag == "sum z") { law.sum[slot] = poly; seen_sum[slot] = true; }
        else if (tag == "prod z") { law.prod[slot] = poly; seen_prod[slot] = true; }
        else if (tag == "neg z") { law.neg[slot] = poly; seen_neg[slot] = true; }
        else throw certification_failure("unknown law cache tag: " + tag);
    }
    if (!ended) throw certification_failure("law cache file truncated: " + path);
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (!seen_sum[i] || !seen_prod[i] || !seen_neg[i])
            throw certification_failure("law cache misses coordinate " + std::to_string(i + 1));
    for (const auto* polys : {&law.sum, &law.prod, &law.neg})
        for (const auto& p : *polys)
            if (!p.integral_coefficients())
                throw integrality_failure("law cache holds a non-integer coefficient");
    certify_ghost_compatibility(idx, law.sum, LawOp::sum);
    certify_ghost_compatibility(idx, law.prod, LawOp::prod);
    certify_ghost_compatibility(idx, law.neg, LawOp::neg);
    law.integrality_certificate = true;
    return law;
}

const UniversalWittLaw& universal_witt_law(int trunc) {
    std::shared_future<std::shared_ptr<const UniversalWittLaw>> fut;
    std::promise<std::shared_ptr<const UniversalWittLaw>> pr;
    bool creator = false;
    {
        std::lock_guard<std::mutex> lk(g_mu);
        auto it = g_cache.find(trunc);
        if (it == g_cache.end()) {
            fut = pr.get_future().share();
            g_cache.emplace(trunc, fut);
            creator = true;
        } else {
            fut = it->second;
        }
    }
    if (creator) {
        try {
            std::string dir = law_cache_dir();
            std::string path = dir.empty() ? "" : dir + "/" + witt_law_cache_file(trunc);
            if (!path.empty() && std::filesystem::exists(path))
                pr.set_value(std::make_shared<const UniversalWittLaw>(load_universal_witt_law(path)));
            else
                pr.set_value(std::make_shared<const UniversalWittLaw>(derive_universal_witt_law(trunc)));
        } catch (...) {
            pr.set_exception(std::current_exception());
        }
    }
    return *fut.get();
}

BigWittVec::BigWittVec(RingSpec ring, std::vector<RingElem> coords)
    : ring_(std::move(ring)), x_(std::move(coords)) {
    if (x_.empty()) throw invalid_value("Witt vector needs at least one coordinate");
    for (const auto& c : x_)
        if (c.ring() != ring_) throw ring_mismatch("Witt coordinate ring mismatch");
}

BigWittVec BigWittVec::zero(const RingSpec& r, int trunc) {
    if (trunc < 1) throw invalid_value("truncation must be >= 1");
    return BigWittVec(r, std::vector<RingElem>(static_cast<std::size_t>(trunc), RingElem::zero(r)));
}

BigWittVec BigWittVec::one(const RingSpec& r, int trunc) {
    return teichmuller(RingElem::one(r), trunc);
}

BigWittVec BigWittVec::teichmuller(const RingElem& a, int trunc) {
    BigWittVec w = zero(a.ring(), trunc);
    w.x_[0] = a;
    return w;
}

const RingElem& BigWittVec::coord(int k) const {
    if (k < 1 || k > trunc()) throw index_out_of_range("Witt coordinate index " + std::to_string(k));
    return x_[static_cast<std::size_t>(k - 1)];
}

RingElem BigWittVec::ghost(long n) const {
    if (n < 1 || n > trunc()) throw index_out_of_range("ghost index " + std::to_string(n));
    RingElem acc = RingElem::zero(ring_);
    for (long k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        acc = acc + RingElem::of(ring_, k)
                        * x_[static_cast<std::size_t>(k - 1)].pow(static_cast<unsigned long>(n / k));
    }
    return acc;
}

std::vector<RingElem> BigWittVec::ghosts() const {
    return ghost_values(full_indices(trunc()), x_);
}

void BigWittVec::require_compatible(const BigWittVec& o) const {
    if (ring_ != o.ring_)
        throw ring_mismatch("Witt ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
    if (trunc() != o.trunc()) throw invalid_value("Witt truncation mismatch");
}

BigWittVec BigWittVec::operator+(const BigWittVec& o) const {
    require_compatible(o);
    return BigWittVec(ring_, witt_coordinate_op(ring_, full_indices(trunc()), WittOp::add, x_, &o.x_));
}

BigWittVec BigWittVec::operator-(const BigWittVec& o) const {
    require_compatible(o);
    return BigWittVec(ring_, witt_coordinate_op(ring_, full_indices(trunc()), WittOp::sub, x_, &o.x_));
}

BigWittVec BigWittVec::operator*(const BigWittVec& o) const {
    require_compatible(o);
    return BigWittVec(ring_, witt_coordinate_op(ring_, full_indices(trunc()), WittOp::mul, x_, &o.x_));
}

BigWittVec BigWittVec::operator-() const {
    return BigWittVec(ring_, witt_coordinate_op(ring_, full_indices(trunc()), WittOp::neg, x_, nullptr));
}

TruncSeries BigWittVec::to_series() const {
    const int n = trunc();
    TruncSeries s = TruncSeries::one(ring_, n);
    for (int k = 1; k <= n; ++k) {
        const RingElem& xk = x_[static_cast<std::size_t>(k - 1)];
        if (xk.is_zero()) continue;
        // (1 - x_k X^k)^{-1} = sum_j x_k^j X^{jk}
        TruncSeries geom = TruncSeries::zero(ring_, n);
        RingElem pw = RingElem::one(ring_);
        for (int j = 0; j * k <= n; ++j) {
            geom.set_coeff(j * k, pw);
            pw = pw * xk;
        }
        s = s * geom;
    }
    return s;
}

BigWittVec BigWittVec::from_series(const TruncSeries& s) {
    if (!s.coeff(0).is_one())
        throw nonunit_constant_term("from_series needs constant term 1, got " + s.coeff(0).str());
    const int n = s.trunc();
    if (n < 1) throw invalid_value("from_series needs truncation >= 1");
    const RingSpec& R = s.ring();
    TruncSeries r = s;
    std::vector<RingElem> coords;
    coords.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        RingElem xk = r.coeff(k);
        coords.push_back(xk);
        if (xk.is_zero()) continue;
        TruncSeries factor = TruncSeries::one(R, n);
        factor.set_coeff(k, -xk);
        r = r * factor; // divides off (1 - x_k X^k)^{-1}
    }
    for (int i = 1; i <= n; ++i)
        if (!r.coeff(i).is_zero())
            throw certification_failure("from_series residual series is not 1");
    return BigWittVec(R, std::move(coords));
}

bool BigWittVec::is_unit() const {
    for (long n = 1; n <= trunc(); ++n)
        if (!ghost(n).is_unit()) return false;
    return true;
}

BigWittVec BigWittVec::inverse() const {
    const int n = trunc();
    std::vector<RingElem> gh;
    gh.reserve(static_cast<std::size_t>(n));
    for (long k = 1; k <= n; ++k) {
        gh.push_back(ghost(k));
        if (!gh.back().is_unit()) throw not_a_unit(k, gh.back().str());
    }
    // z_k(a, b) = gh_k(a) b_k + (terms in b_j, j < k), so solve
    // triangularly and divide by the unit ghost.
    BigWittVec b = zero(ring_, n);
    const BigWittVec e = one(ring_, n);
    for (int k = 1; k <= n; ++k) {
        BigWittVec m = (*this) * b;
        b.x_[static_cast<std::size_t>(k - 1)] =
            (e.coord(k) - m.coord(k)) * gh[static_cast<std::size_t>(k - 1)].inverse();
    }
    if ((*this) * b != e)
        throw certification_failure("Witt inverse failed verification by multiplication");
    return b;
}

BigWittVec BigWittVec::from_ghost(const RingSpec& r, const std::vector<RingElem>& g) {
    if (!r.torsion_free())
        throw invalid_value("from_ghost needs a torsion-free coefficient ring, got " + r.name());
    if (g.empty()) throw invalid_value("from_ghost needs at least one ghost component");
    return BigWittVec(r, ghost_invert_values(full_indices(static_cast<int>(g.size())), g));
}

BigWittVec BigWittVec::map_ring(const RingSpec& target) const {
    std::vector<RingElem> out;
    out.reserve(x_.size());
    for (const auto& c : x_) out.push_back(reduce_to(c, target));
    return BigWittVec(target, std::move(out));
}

namespace {

BigWittVec eval_law(const std::vector<SparsePoly>& polys, const BigWittVec& a,
                    const BigWittVec* b) {
    std::vector<RingElem> values = a.coords();
    if (b) {
        values.insert(values.end(), b->coords().begin(), b->coords().end());
    }
    std::vector<RingElem> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.eval(values, a.ring()));
    return BigWittVec(a.ring(), std::move(out));
}

} // namespace

BigWittVec add_via_law_polys(const BigWittVec& a, const BigWittVec& b) {
    const UniversalWittLaw& law = universal_witt_law(a.trunc());
    return eval_law(law.sum, a, &b);
}

BigWittVec mul_via_law_polys(const BigWittVec& a, const BigWittVec& b) {
    const UniversalWittLaw& law = universal_witt_law(a.trunc());
    return eval_law(law.prod, a, &b);
}

BigWittVec neg_via_law_polys(const BigWittVec& a) {
    const UniversalWittLaw& law = universal_witt_law(a.trunc());
    return eval_law(law.neg, a, nullptr);
}

} // namespace witt
