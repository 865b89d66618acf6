#include "witt/symgrp.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "witt/int_matrix.hpp"

namespace witt {

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (std::uint8_t v : img_) {
        if (v >= img_.size() || seen[v]) throw invalid_value("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& o) const {
    if (degree() != o.degree()) throw invalid_value("permutation degree mismatch");
    std::vector<std::uint8_t> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = img_[o.img_[i]];
    return Permutation(std::move(img));
}

bool Permutation::commutes_with(const Permutation& o) const {
    if (degree() != o.degree()) throw invalid_value("permutation degree mismatch");
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[o.img_[i]] != o.img_[img_[i]]) return false;
    return true;
}

std::vector<int> Permutation::cycle_lengths() const {
    std::vector<int> lens;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

long Permutation::order() const {
    long ord = 1;
    for (int len : cycle_lengths()) ord = std::lcm(ord, static_cast<long>(len));
    return ord;
}

bool Permutation::has_p_power_order(long p) const {
    long ord = order();
    while (ord % p == 0) ord /= p;
    return ord == 1;
}

SymmetricGroup::SymmetricGroup(int degree) : m_(degree), size_(1) {
    if (degree < 0 || degree > 9)
        throw cap_exceeded("symmetric group degree " + std::to_string(degree) + " exceeds cap 9");
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(degree));
    std::iota(perm.begin(), perm.end(), 0);
    size_ = 0;
    do {
        flat_.insert(flat_.end(), perm.begin(), perm.end());
        ++size_; // degree 0 still contributes the empty permutation
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<std::vector<int>, std::pair<long, long>> by_type; // type -> (rep, size)
    const long n = size();
    for (long id = 0; id < n; ++id) {
        std::vector<int> t = cycle_type(id);
        auto it = by_type.find(t);
        if (it == by_type.end()) by_type.emplace(std::move(t), std::make_pair(id, 1L));
        else it->second.second++;
    }
    for (auto& [t, rs] : by_type) classes_.push_back({t, rs.first, rs.second});
}

const SymmetricGroup& SymmetricGroup::of(int degree) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SymmetricGroup>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(degree);
    if (it == cache.end())
        it = cache.emplace(degree, std::unique_ptr<SymmetricGroup>(new SymmetricGroup(degree))).first;
    return *it->second;
}

bool SymmetricGroup::commute(long a, long b) const {
    const std::uint8_t* pa = images(a);
    const std::uint8_t* pb = images(b);
    for (int i = 0; i < m_; ++i)
        if (pa[pb[i]] != pb[pa[i]]) return false;
    return true;
}

std::vector<int> SymmetricGroup::cycle_type(long id) const {
    const std::uint8_t* img = images(id);
    std::vector<int> lens;
    std::vector<bool> seen(static_cast<std::size_t>(m_), false);
    for (int i = 0; i < m_; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = img[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

bool SymmetricGroup::p_power_order(long id, long p) const {
    for (int len : cycle_type(id)) {
        long l = len;
        while (l % p == 0) l /= p;
        if (l != 1) return false;
    }
    return true;
}

std::vector<std::int32_t> SymmetricGroup::all_ids() const {
    std::vector<std::int32_t> ids(static_cast<std::size_t>(size()));
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

std::vector<std::int32_t> SymmetricGroup::centralizer(long id) const {
    std::vector<std::int32_t> out;
    const long n = size();
    for (long g = 0; g < n; ++g)
        if (commute(g, id)) out.push_back(static_cast<std::int32_t>(g));
    return out;
}

std::vector<std::int32_t> SymmetricGroup::centralizer_in(const std::vector<std::int32_t>& c,
                                                         long id) const {
    std::vector<std::int32_t> out;
    out.reserve(c.size());
    for (std::int32_t g : c)
        if (commute(g, id)) out.push_back(g);
    return out;
}

namespace {

std::atomic<int> g_threads{1};

void check_hom_caps(int h, int m) {
    if (h < 1) throw invalid_value("height must be >= 1");
    if (m < 0) throw invalid_value("degree must be >= 0");
    const bool ok = (h <= 2 && m <= 8) || (h == 3 && m <= 6);
    if (!ok)
        throw cap_exceeded("hom enumeration cap: need m <= 8 for h <= 2, m <= 6 for h = 3; got h = "
                           + std::to_string(h) + ", m = " + std::to_string(m));
}

// Counts |Hom(Z_p^{h}, C)| for a subgroup C given as a sorted element
// list, by the centralizer recursion.  Memoized on the exact element
// set of the accumulated centralizer (a sound merge: the count depends
// only on that subgroup).
struct HomCounter {
    const SymmetricGroup& G;
    long p;
    std::vector<char> p_flag;
    std::map<std::pair<int, std::vector<std::int32_t>>, long> memo;

    HomCounter(const SymmetricGroup& g, long prime) : G(g), p(prime) {
        const long n = G.size();
        p_flag.resize(static_cast<std::size_t>(n));
        for (long id = 0; id < n; ++id)
            p_flag[static_cast<std::size_t>(id)] = G.p_power_order(id, p) ? 1 : 0;
    }

    long count(int h, const std::vector<std::int32_t>& c) {
        if (h == 0) return 1;
        if (h == 1) {
            long k = 0;
            for (std::int32_t g : c) k += p_flag[static_cast<std::size_t>(g)];
            return k;
        }
        auto key = std::make_pair(h, c);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long total = 0;
        for (std::int32_t g : c) {
            if (!p_flag[static_cast<std::size_t>(g)]) continue;
            total += count(h - 1, G.centralizer_in(c, g));
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

} // namespace

void set_oracle_threads(int threads) { g_threads.store(threads < 1 ? 1 : threads); }
int oracle_threads() { return g_threads.load(); }

mpz_class hom_count(int h, long p, int m) {
    check_hom_caps(h, m);
    if (!is_small_prime(p)) throw invalid_ring("p = " + std::to_string(p) + " is not a small prime");
    if (m <= 1) return 1;
    const SymmetricGroup& G = SymmetricGroup::of(m);
    if (h == 1) {
        HomCounter hc(G, p);
        return hc.count(1, G.all_ids());
    }
    // fan out over the conjugacy class of the first tuple element
    std::vector<const SymmetricGroup::ConjClass*> pclasses;
    for (const auto& cl : G.classes())
        if (G.p_power_order(cl.rep, p)) pclasses.push_back(&cl);

    auto run = [&](const SymmetricGroup::ConjClass& cl) -> mpz_class {
        HomCounter hc(G, p);
        long inner = hc.count(h - 1, G.centralizer(cl.rep));
        return mpz_class(cl.size) * mpz_class(inner);
    };

    mpz_class total(0);
    const int threads = oracle_threads();
    if (threads <= 1 || pclasses.size() <= 1) {
        for (const auto* cl : pclasses) total += run(*cl);
    } else {
        std::vector<std::future<mpz_class>> futs;
        futs.reserve(pclasses.size());
        for (const auto* cl : pclasses)
            futs.push_back(std::async(std::launch::async, run, std::cref(*cl)));
        for (auto& f : futs) total += f.get();
    }
    return total;
}

std::vector<SubgroupKey> enumerate_sublattices(int h, long p, int d) {
    if (h < 1) throw invalid_value("lattice rank must be >= 1");
    if (d < 0) throw invalid_value("depth must be >= 0");
    long index = 1;
    for (int i = 0; i < d; ++i) {
        index *= p;
        if (index > 4096) throw cap_exceeded("explicit sublattice enumeration cap: index > 4096");
    }
    // upper-triangular bases: diagonal p^{e_0..e_{h-1}} with sum e = d,
    // entries above the pivot of column j in [0, p^{e_j})
    std::vector<SubgroupKey> out;
    std::vector<int> e(static_cast<std::size_t>(h), 0);
    std::function<void(int, int)> diag = [&](int pos, int rem) {
        if (pos == h) {
            if (rem != 0) return;
            std::vector<long> dv(static_cast<std::size_t>(h));
            for (int i = 0; i < h; ++i) {
                long v = 1;
                for (int t = 0; t < e[static_cast<std::size_t>(i)]; ++t) v *= p;
                dv[static_cast<std::size_t>(i)] = v;
            }
            // fill the above-diagonal entries column by column
            std::vector<long> flat(static_cast<std::size_t>(h * h), 0);
            for (int i = 0; i < h; ++i) flat[static_cast<std::size_t>(i * h + i)] = dv[static_cast<std::size_t>(i)];
            std::function<void(int, int)> fill = [&](int col, int row) {
                if (col == h) {
                    out.push_back(SubgroupKey{flat, index});
                    return;
                }
                if (row == col) { fill(col + 1, 0); return; }
                for (long v = 0; v < dv[static_cast<std::size_t>(col)]; ++v) {
                    flat[static_cast<std::size_t>(row * h + col)] = v;
                    fill(col, row + 1);
                }
                flat[static_cast<std::size_t>(row * h + col)] = 0;
            };
            fill(0, 0);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[static_cast<std::size_t>(pos)] = v;
            diag(pos + 1, rem - v);
        }
        e[static_cast<std::size_t>(pos)] = 0;
    };
    diag(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class subgroup_count(int h, long p, int d) {
    if (h < 1 || h > 4) throw cap_exceeded("subgroup_count cap: h <= 4, got " + std::to_string(h));
    if (d < 0 || d > 6) throw cap_exceeded("subgroup_count cap: d <= 6, got " + std::to_string(d));
    if (!is_small_prime(p)) throw invalid_ring("p = " + std::to_string(p) + " is not a small prime");
    // Hermite forms grouped by diagonal: column j contributes
    // (p^{e_j})^j reduced above-pivot entries.
    mpz_class total(0);
    std::vector<int> e(static_cast<std::size_t>(h), 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == h) {
            if (rem != 0) return;
            mpz_class ways(1);
            for (int j = 0; j < h; ++j) {
                mpz_class pej;
                mpz_ui_pow_ui(pej.get_mpz_t(), static_cast<unsigned long>(p),
                              static_cast<unsigned long>(e[static_cast<std::size_t>(j)]));
                mpz_class t;
                mpz_pow_ui(t.get_mpz_t(), pej.get_mpz_t(), static_cast<unsigned long>(j));
                ways *= t;
            }
            total += ways;
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, rem - v);
        }
        e[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, d);
    return total;
}

mpz_class hom_count_via_isoclasses(int h, long p, int m) {
    check_hom_caps(h, m);
    if (!is_small_prime(p)) throw invalid_ring("p = " + std::to_string(p) + " is not a small prime");
    if (m <= 1) return 1;
    // orbit-type multisets: k_H copies of Z_p^h/H per subgroup H of
    // index <= m; each class contributes m!/prod |Aut|^{k} k! with
    // |Aut(Z_p^h/H)| = [Z_p^h : H]
    std::vector<SubgroupKey> keys;
    for (int d = 0;; ++d) {
        long idx = 1;
        bool over = false;
        for (int t = 0; t < d; ++t) {
            idx *= p;
            if (idx > m) { over = true; break; }
        }
        if (over || idx > m) break;
        auto ks = enumerate_sublattices(h, p, d);
        keys.insert(keys.end(), ks.begin(), ks.end());
    }
    mpq_class total(0);
    std::function<void(std::size_t, int, const mpq_class&)> rec =
        [&](std::size_t pos, int rem, const mpq_class& factor) {
            if (rem == 0) {
                total += factor;
                return;
            }
            if (pos == keys.size()) return;
            const long idx = keys[pos].index;
            mpq_class f = factor;
            mpz_class fact(1);
            for (int k = 0; static_cast<long>(k) * idx <= rem; ++k) {
                if (k > 0) {
                    fact *= k;
                    mpz_class denom(1);
                    for (int t = 0; t < k; ++t) denom *= idx;
                    denom *= fact;
                    f = factor / mpq_class(denom);
                }
                rec(pos + 1, rem - static_cast<int>(k * idx), f);
            }
        };
    rec(0, m, mpq_class(1));
    mpz_class mf(1);
    for (int i = 2; i <= m; ++i) mf *= i;
    mpq_class result = mpq_class(mf) * total;
    result.canonicalize();
    if (result.get_den() != 1)
        throw certification_failure("isoclass hom count is not an integer");
    return result.get_num();
}

mpz_class elements_of_order_dividing(int degree, long order) {
    if (degree < 0 || degree > 9)
        throw cap_exceeded("elements_of_order_dividing cap: degree <= 9, got "
                           + std::to_string(degree));
    if (order < 1) throw invalid_value("order must be >= 1");
    const SymmetricGroup& G = SymmetricGroup::of(degree);
    long count = 0;
    const long n = G.size();
    for (long id = 0; id < n; ++id) {
        bool ok = true;
        for (int len : G.cycle_type(id))
            if (order % len != 0) { ok = false; break; }
        if (ok) ++count;
    }
    // Frobenius' theorem: when the order divides |Sigma_degree|, it
    // divides the count
    if (n % order == 0 && count % order != 0)
        throw certification_failure("Frobenius divisibility violated at degree "
                                    + std::to_string(degree) + ", order " + std::to_string(order));
    return mpz_class(count);
}

namespace {

// Stabilizer sublattice of a point under a commuting tuple: BFS the
// orbit with discrete-log labels, collect closing relations plus the
// element orders, and canonicalize with the Hermite row basis.
SubgroupKey orbit_stabilizer_key(const SymmetricGroup& G, const std::vector<std::int32_t>& tuple,
                                 int start, std::vector<bool>& visited) {
    const int h = static_cast<int>(tuple.size());
    const int m = G.degree();
    std::vector<std::vector<mpz_class>> gens;
    std::vector<std::vector<long>> label(static_cast<std::size_t>(m));
    std::vector<int> queue;
    label[static_cast<std::size_t>(start)] = std::vector<long>(static_cast<std::size_t>(h), 0);
    queue.push_back(start);
    visited[static_cast<std::size_t>(start)] = true;
    std::size_t qi = 0;
    long orbit = 0;
    while (qi < queue.size()) {
        int x = queue[qi++];
        ++orbit;
        for (int i = 0; i < h; ++i) {
            int y = G.images(tuple[static_cast<std::size_t>(i)])[x];
            std::vector<long> v = label[static_cast<std::size_t>(x)];
            v[static_cast<std::size_t>(i)] += 1;
            if (!visited[static_cast<std::size_t>(y)]) {
                visited[static_cast<std::size_t>(y)] = true;
                label[static_cast<std::size_t>(y)] = v;
                queue.push_back(y);
            } else {
                std::vector<mpz_class> rel(static_cast<std::size_t>(h));
                for (int t = 0; t < h; ++t)
                    rel[static_cast<std::size_t>(t)] =
                        v[static_cast<std::size_t>(t)] - label[static_cast<std::size_t>(y)][static_cast<std::size_t>(t)];
                gens.push_back(std::move(rel));
            }
        }
    }
    for (int i = 0; i < h; ++i) {
        Permutation g(std::vector<std::uint8_t>(G.images(tuple[static_cast<std::size_t>(i)]),
                                                G.images(tuple[static_cast<std::size_t>(i)]) + m));
        std::vector<mpz_class> rel(static_cast<std::size_t>(h), mpz_class(0));
        rel[static_cast<std::size_t>(i)] = g.order();
        gens.push_back(std::move(rel));
    }
    IntMatrix basis = hermite_row_basis(gens, h);
    if (basis.rows() != h)
        throw certification_failure("stabilizer lattice is not full rank");
    SubgroupKey key;
    key.hnf.reserve(static_cast<std::size_t>(h * h));
    mpz_class det(1);
    for (long i = 0; i < h; ++i) {
        det *= basis.at(i, i);
        for (long j = 0; j < h; ++j) {
            if (!basis.at(i, j).fits_slong_p())
                throw certification_failure("stabilizer basis entry overflows");
            key.hnf.push_back(basis.at(i, j).get_si());
        }
    }
    if (det != orbit)
        throw certification_failure("stabilizer index does not match orbit size");
    key.index = static_cast<long>(orbit);
    return key;
}

SparsePoly mark_value_of_tuple(const SymmetricGroup& G, const MarkSpec& mark,
                               const std::vector<std::int32_t>& tuple) {
    SparsePoly f = SparsePoly::constant(1);
    std::vector<bool> visited(static_cast<std::size_t>(G.degree()), false);
    for (int x = 0; x < G.degree(); ++x) {
        if (visited[static_cast<std::size_t>(x)]) continue;
        SubgroupKey key = orbit_stabilizer_key(G, tuple, x, visited);
        f = f * mark.value(key);
    }
    return f;
}

void enumerate_tuples(const SymmetricGroup& G, long p, int h,
                      std::vector<std::int32_t>& tuple, const std::vector<std::int32_t>& pool,
                      const std::function<void(const std::vector<std::int32_t>&)>& visit) {
    if (static_cast<int>(tuple.size()) == h) {
        visit(tuple);
        return;
    }
    for (std::int32_t g : pool) {
        if (!G.p_power_order(g, p)) continue;
        tuple.push_back(g);
        enumerate_tuples(G, p, h, tuple, G.centralizer_in(pool, g), visit);
        tuple.pop_back();
    }
}

mpz_class factorial(int m) {
    mpz_class f(1);
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

} // namespace

MarkSpec unit_mark_lattice(int h, long p) {
    MarkSpec m;
    m.group = MarkSpec::Group::p_adic_lattice;
    m.h = h;
    m.p = p;
    m.value = [](const SubgroupKey&) { return SparsePoly::constant(1); };
    return m;
}

MarkSpec unit_mark_integer_line() {
    MarkSpec m;
    m.group = MarkSpec::Group::integer_line;
    m.h = 1;
    m.value = [](const SubgroupKey&) { return SparsePoly::constant(1); };
    return m;
}

MarkSpec formal_mark_lattice(int h, long p, int max_degree) {
    MarkSpec m;
    m.group = MarkSpec::Group::p_adic_lattice;
    m.h = h;
    m.p = p;
    auto keys = std::make_shared<std::vector<SubgroupKey>>();
    for (int d = 0;; ++d) {
        long idx = 1;
        bool over = false;
        for (int t = 0; t < d; ++t) {
            idx *= p;
            if (idx > max_degree) { over = true; break; }
        }
        if (over || idx > max_degree) break;
        auto ks = enumerate_sublattices(h, p, d);
        keys->insert(keys->end(), ks.begin(), ks.end());
    }
    m.value = [keys](const SubgroupKey& k) {
        auto it = std::lower_bound(keys->begin(), keys->end(), k);
        if (it == keys->end() || !(*it == k))
            throw invalid_value("mark value requested for a subgroup outside the declared bound");
        return SparsePoly::var(static_cast<VarId>(it - keys->begin()));
    };
    return m;
}

MarkSpec formal_mark_integer_line(int max_degree) {
    MarkSpec m;
    m.group = MarkSpec::Group::integer_line;
    m.h = 1;
    m.value = [max_degree](const SubgroupKey& k) {
        if (k.index < 1 || k.index > max_degree)
            throw invalid_value("mark value requested for a subgroup outside the declared bound");
        return SparsePoly::var(static_cast<VarId>(k.index - 1));
    };
    return m;
}

PolySeries mark_lhs(const MarkSpec& mark, int trunc) {
    PolySeries out = PolySeries::zero(trunc);
    out.c[0] = SparsePoly::constant(1); // the empty G-set has f = 1
    for (int m = 1; m <= trunc; ++m) {
        const SymmetricGroup& G = SymmetricGroup::of(m);
        SparsePoly total;
        if (mark.group == MarkSpec::Group::integer_line) {
            if (m > 8) throw cap_exceeded("mark_lhs cap: degree <= 8 for G = Z");
            const long n = G.size();
            std::vector<std::int32_t> tuple(1, 0);
            for (long id = 0; id < n; ++id) {
                tuple[0] = static_cast<std::int32_t>(id);
                total = total + mark_value_of_tuple(G, mark, tuple);
            }
        } else {
            check_hom_caps(mark.h, m);
            std::vector<std::int32_t> tuple;
            enumerate_tuples(G, mark.p, mark.h, tuple, G.all_ids(),
                             [&](const std::vector<std::int32_t>& t) {
                                 total = total + mark_value_of_tuple(G, mark, t);
                             });
        }
        out.c[static_cast<std::size_t>(m)] = total.scaled(mpq_class(1, factorial(m)));
    }
    return out;
}

PolySeries mark_rhs(const MarkSpec& mark, int trunc) {
    PolySeries g = PolySeries::zero(trunc);
    if (mark.group == MarkSpec::Group::integer_line) {
        for (long n = 1; n <= trunc; ++n) {
            SubgroupKey key{{n}, n};
            g.c[static_cast<std::size_t>(n)] =
                g.c[static_cast<std::size_t>(n)] + mark.value(key).scaled(mpq_class(1, n));
        }
    } else {
        for (int d = 0;; ++d) {
            long idx = 1;
            bool over = false;
            for (int t = 0; t < d; ++t) {
                idx *= mark.p;
                if (idx > trunc) { over = true; break; }
            }
            if (over || idx > trunc) break;
            for (const auto& key : enumerate_sublattices(mark.h, mark.p, d))
                g.c[static_cast<std::size_t>(idx)] =
                    g.c[static_cast<std::size_t>(idx)] + mark.value(key).scaled(mpq_class(1, idx));
        }
    }
    return poly_series_exp(g);
}

} // namespace witt
