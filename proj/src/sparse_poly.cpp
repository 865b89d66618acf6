#include "witt/sparse_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace witt {

SparsePoly SparsePoly::constant(const mpq_class& c) {
    SparsePoly p;
    if (sgn(c) != 0) p.terms_.emplace(Monomial{}, c);
    return p;
}

SparsePoly SparsePoly::var(VarId v, std::uint32_t exp) {
    SparsePoly p;
    if (exp == 0) return constant(1);
    p.terms_.emplace(Monomial{{v, exp}}, mpq_class(1));
    return p;
}

mpq_class SparsePoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

VarId SparsePoly::var_span() const {
    VarId n = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (v + 1 > n) n = v + 1;
    return n;
}

void SparsePoly::add_term(const Monomial& m, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) out.push_back(a[i++]);
        else if (b[j].first < a[i].first) out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i; ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

} // namespace

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(merge_monomials(ma, mb), ca * cb);
    return r;
}

SparsePoly SparsePoly::pow(std::uint32_t e) const {
    SparsePoly acc = constant(1);
    SparsePoly base(*this);
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

SparsePoly SparsePoly::scaled(const mpq_class& c) const {
    SparsePoly r;
    if (sgn(c) == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

SparsePoly SparsePoly::divided(long k) const {
    if (k == 0) throw non_exact_division("polynomial division by zero");
    return scaled(mpq_class(1, k));
}

bool SparsePoly::integral_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

bool SparsePoly::p_local_coefficients(long p) const {
    for (const auto& [m, c] : terms_)
        if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
            return false;
    return true;
}

std::vector<mpz_class> SparsePoly::denominators() const {
    std::vector<mpz_class> d;
    for (const auto& [m, c] : terms_) d.push_back(c.get_den());
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

RingElem SparsePoly::eval(const std::vector<RingElem>& values, const RingSpec& ring) const {
    std::vector<std::vector<RingElem>> pw(values.size());
    auto power = [&](VarId v, std::uint32_t e) -> const RingElem& {
        auto& vec = pw.at(v);
        if (vec.empty()) vec.push_back(RingElem::one(ring));
        while (vec.size() <= e) vec.push_back(vec.back() * values[v]);
        return vec[e];
    };
    RingElem acc = RingElem::zero(ring);
    for (const auto& [m, c] : terms_) {
        RingElem t(ring, c);
        for (const auto& [v, e] : m) t = t * power(v, e);
        acc = acc + t;
    }
    return acc;
}

std::string SparsePoly::str(const std::function<std::string(VarId)>& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class a = c;
        if (first) {
            if (sgn(a) < 0) { out << "-"; a = -a; }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        const bool unit_coeff = (a == 1) && !m.empty();
        if (!unit_coeff) {
            out << a.get_str();
            if (!m.empty()) out << "*";
        }
        bool first_factor = true;
        for (const auto& [v, e] : m) {
            if (!first_factor) out << "*";
            first_factor = false;
            out << name(v);
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    char take() { skip_ws(); return s[i++]; }
};

std::string take_number(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw invalid_value("expected a number in polynomial at offset "
                                          + std::to_string(start));
    return c.s.substr(start, c.i - start);
}

std::string take_ident(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size()
           && (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
        ++c.i;
    if (c.i == start) throw invalid_value("expected an identifier in polynomial at offset "
                                          + std::to_string(start));
    return c.s.substr(start, c.i - start);
}

} // namespace

SparsePoly SparsePoly::parse(const std::string& s,
                             const std::function<VarId(const std::string&)>& lookup) {
    SparsePoly out;
    Cursor c{s};
    if (c.done()) throw invalid_value("empty polynomial");
    if (c.peek() == '0') {
        std::size_t save = c.i;
        c.take();
        if (c.done()) return out;
        c.i = save;
    }
    bool neg = false;
    if (c.peek() == '-') { c.take(); neg = true; }
    for (;;) {
        mpq_class coeff(neg ? -1 : 1);
        Monomial mono;
        bool want_factor = true;
        bool saw_coeff = false;
        while (want_factor) {
            if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
                if (saw_coeff) throw invalid_value("two numeric factors in a term");
                mpq_class a(take_number(c));
                if (c.peek() == '/') {
                    c.take();
                    mpq_class b(take_number(c));
                    a /= b;
                }
                coeff *= a;
                saw_coeff = true;
            } else {
                std::string id = take_ident(c);
                std::uint32_t e = 1;
                if (c.peek() == '^') {
                    c.take();
                    e = static_cast<std::uint32_t>(std::stoul(take_number(c)));
                }
                VarId v = lookup(id);
                auto it = std::find_if(mono.begin(), mono.end(),
                                       [&](const auto& pr) { return pr.first == v; });
                if (it != mono.end()) it->second += e;
                else mono.emplace_back(v, e);
            }
            if (c.peek() == '*') c.take();
            else want_factor = false;
        }
        std::sort(mono.begin(), mono.end());
        out.add_term(mono, coeff);
        if (c.done()) break;
        char op = c.take();
        if (op == '+') neg = false;
        else if (op == '-') neg = true;
        else throw invalid_value(std::string("unexpected character '") + op + "' in polynomial");
    }
    return out;
}

PolySeries PolySeries::zero(int m) {
    PolySeries s;
    s.c.assign(static_cast<std::size_t>(m) + 1, SparsePoly());
    return s;
}

PolySeries PolySeries::one(int m) {
    PolySeries s = zero(m);
    s.c[0] = SparsePoly::constant(1);
    return s;
}

PolySeries PolySeries::operator*(const PolySeries& o) const {
    if (c.size() != o.c.size()) throw invalid_value("poly series truncation mismatch");
    PolySeries r = zero(trunc());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < c.size(); ++j) {
            if (o.c[j].is_zero()) continue;
            r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        }
    }
    return r;
}

PolySeries poly_series_exp(const PolySeries& a) {
    if (!a.c.empty() && !a.c[0].is_zero())
        throw nonzero_constant_term("poly series exp needs zero constant term");
    const int m = a.trunc();
    PolySeries e = PolySeries::zero(m);
    e.c[0] = SparsePoly::constant(1);
    for (int n = 1; n <= m; ++n) {
        SparsePoly acc;
        for (int k = 1; k <= n; ++k) {
            if (a.c[k].is_zero()) continue;
            acc = acc + a.c[k].scaled(k) * e.c[n - k];
        }
        e.c[n] = acc.divided(n);
    }
    return e;
}

} // namespace witt
