#include "witt/int_matrix.hpp"

#include <algorithm>

namespace witt {

IntMatrix::IntMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw invalid_value("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), mpz_class(0));
}

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
    const long r = static_cast<long>(rows.size());
    const long c = r == 0 ? 0 : static_cast<long>(rows[0].size());
    IntMatrix m(r, c);
    for (long i = 0; i < r; ++i) {
        if (static_cast<long>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw invalid_value("ragged rows");
        for (long j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw invalid_value("matrix shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (sgn(a) == 0) continue;
            for (long j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

void IntMatrix::swap_rows(long i, long j) {
    if (i == j) return;
    for (long c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(long i, long j) {
    if (i == j) return;
    for (long r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(long dst, long src, const mpz_class& k) {
    if (sgn(k) == 0) return;
    for (long c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
}

void IntMatrix::add_col_multiple(long dst, long src, const mpz_class& k) {
    if (sgn(k) == 0) return;
    for (long r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
}

void IntMatrix::negate_row(long i) {
    for (long c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(long i) {
    for (long r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) throw invalid_value("determinant of a non-square matrix");
    const long n = rows_;
    if (n == 0) return 1;
    IntMatrix a(*this);
    mpz_class prev(1);
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (sgn(a.at(k, k)) == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (sgn(a.at(i, k)) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

namespace {

// True when row i and column i below/right of the pivot are clear.
bool pivot_is_lone(const IntMatrix& d, long s) {
    for (long i = s + 1; i < d.rows(); ++i)
        if (sgn(d.at(i, s)) != 0) return false;
    for (long j = s + 1; j < d.cols(); ++j)
        if (sgn(d.at(s, j)) != 0) return false;
    return true;
}

bool find_min_nonzero(const IntMatrix& d, long s, long& ri, long& ci) {
    bool found = false;
    mpz_class best;
    for (long i = s; i < d.rows(); ++i)
        for (long j = s; j < d.cols(); ++j) {
            if (sgn(d.at(i, j)) == 0) continue;
            mpz_class a = abs(d.at(i, j));
            if (!found || a < best) { best = a; ri = i; ci = j; found = true; }
        }
    return found;
}

} // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    SmithNormalForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), {}, false};
    IntMatrix& d = out.d;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;
    const long nmin = std::min(m.rows(), m.cols());

    for (long s = 0; s < nmin; ++s) {
        long ri = 0, ci = 0;
        if (!find_min_nonzero(d, s, ri, ci)) break; // rest is zero
        d.swap_rows(s, ri); u.swap_rows(s, ri);
        d.swap_cols(s, ci); v.swap_cols(s, ci);
        while (!pivot_is_lone(d, s)) {
            for (long i = s + 1; i < d.rows(); ++i) {
                if (sgn(d.at(i, s)) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, s).get_mpz_t(), d.at(s, s).get_mpz_t());
                d.add_row_multiple(i, s, -q);
                u.add_row_multiple(i, s, -q);
            }
            for (long j = s + 1; j < d.cols(); ++j) {
                if (sgn(d.at(s, j)) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(s, j).get_mpz_t(), d.at(s, s).get_mpz_t());
                d.add_col_multiple(j, s, -q);
                v.add_col_multiple(j, s, -q);
            }
            if (!find_min_nonzero(d, s, ri, ci)) break;
            d.swap_rows(s, ri); u.swap_rows(s, ri);
            d.swap_cols(s, ci); v.swap_cols(s, ci);
        }
        // Pull in any entry the pivot does not divide, then repeat.
        for (;;) {
            long bi = -1;
            for (long i = s + 1; i < d.rows() && bi < 0; ++i)
                for (long j = s + 1; j < d.cols(); ++j)
                    if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(s, s).get_mpz_t())) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            d.add_row_multiple(s, bi, mpz_class(1));
            u.add_row_multiple(s, bi, mpz_class(1));
            while (!pivot_is_lone(d, s)) {
                long ri2 = 0, ci2 = 0;
                find_min_nonzero(d, s, ri2, ci2);
                d.swap_rows(s, ri2); u.swap_rows(s, ri2);
                d.swap_cols(s, ci2); v.swap_cols(s, ci2);
                for (long i = s + 1; i < d.rows(); ++i) {
                    if (sgn(d.at(i, s)) == 0) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), d.at(i, s).get_mpz_t(), d.at(s, s).get_mpz_t());
                    d.add_row_multiple(i, s, -q);
                    u.add_row_multiple(i, s, -q);
                }
                for (long j = s + 1; j < d.cols(); ++j) {
                    if (sgn(d.at(s, j)) == 0) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), d.at(s, j).get_mpz_t(), d.at(s, s).get_mpz_t());
                    d.add_col_multiple(j, s, -q);
                    v.add_col_multiple(j, s, -q);
                }
            }
        }
        if (sgn(d.at(s, s)) < 0) {
            d.negate_row(s);
            u.negate_row(s);
        }
    }

    for (long s = 0; s < nmin; ++s)
        if (sgn(d.at(s, s)) != 0) out.invariant_factors.push_back(d.at(s, s));

    out.certified = (u * m * v == d);
    if (!out.certified)
        throw certification_failure("Smith normal form transforms failed re-multiplication");
    return out;
}

IntMatrix hermite_row_basis(const std::vector<std::vector<mpz_class>>& gens, long cols) {
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& g : gens) {
        if (static_cast<long>(g.size()) != cols) throw invalid_value("generator width mismatch");
        rows.push_back(g);
    }
    std::vector<std::vector<mpz_class>> basis; // echelon rows, pivot columns increasing
    std::vector<long> pivot_col;

    auto reduce_row = [&](std::vector<mpz_class> r) {
        for (;;) {
            long lead = -1;
            for (long j = 0; j < cols; ++j)
                if (sgn(r[static_cast<std::size_t>(j)]) != 0) { lead = j; break; }
            if (lead < 0) return; // reduced to zero
            auto it = std::lower_bound(pivot_col.begin(), pivot_col.end(), lead);
            std::size_t pos = static_cast<std::size_t>(it - pivot_col.begin());
            if (it == pivot_col.end() || *it != lead) {
                if (sgn(r[static_cast<std::size_t>(lead)]) < 0)
                    for (auto& x : r) x = -x;
                basis.insert(basis.begin() + static_cast<long>(pos), r);
                pivot_col.insert(it, lead);
                return;
            }
            auto& b = basis[pos];
            mpz_class& p = b[static_cast<std::size_t>(lead)];
            mpz_class& a = r[static_cast<std::size_t>(lead)];
            if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
                for (long j = 0; j < cols; ++j)
                    r[static_cast<std::size_t>(j)] -= q * b[static_cast<std::size_t>(j)];
            } else {
                // gcd step: replace pivot row by the gcd combination and
                // push the remainder row back through the loop.
                mpz_class g, x, y;
                mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
                std::vector<mpz_class> newb(static_cast<std::size_t>(cols));
                for (long j = 0; j < cols; ++j)
                    newb[static_cast<std::size_t>(j)] =
                        x * b[static_cast<std::size_t>(j)] + y * r[static_cast<std::size_t>(j)];
                mpz_class pq = p / g, aq = a / g;
                std::vector<mpz_class> rem(static_cast<std::size_t>(cols));
                for (long j = 0; j < cols; ++j)
                    rem[static_cast<std::size_t>(j)] =
                        aq * b[static_cast<std::size_t>(j)] - pq * r[static_cast<std::size_t>(j)];
                b = newb;
                r = rem;
            }
        }
    };

    for (auto& r : rows) reduce_row(std::move(r));

    // Normalize entries above each pivot into [0, pivot).
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const long pc = pivot_col[k];
        const mpz_class& p = basis[k][static_cast<std::size_t>(pc)];
        for (std::size_t i = 0; i < k; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), basis[i][static_cast<std::size_t>(pc)].get_mpz_t(), p.get_mpz_t());
            if (sgn(q) == 0) continue;
            for (long j = 0; j < cols; ++j)
                basis[i][static_cast<std::size_t>(j)] -= q * basis[k][static_cast<std::size_t>(j)];
        }
    }
    return IntMatrix::from_rows(basis.empty()
                                    ? std::vector<std::vector<mpz_class>>{}
                                    : basis);
}

bool lattice_contains(const IntMatrix& basis, const std::vector<mpz_class>& v) {
    std::vector<mpz_class> r = v;
    const long cols = static_cast<long>(v.size());
    long row = 0;
    for (long j = 0; j < cols; ++j) {
        if (sgn(r[static_cast<std::size_t>(j)]) == 0) continue;
        // find the basis row with pivot at column j
        long found = -1;
        for (long i = row; i < basis.rows(); ++i) {
            long lead = -1;
            for (long c = 0; c < cols; ++c)
                if (sgn(basis.at(i, c)) != 0) { lead = c; break; }
            if (lead == j) { found = i; break; }
            if (lead > j) break;
        }
        if (found < 0) return false;
        const mpz_class& p = basis.at(found, j);
        if (!mpz_divisible_p(r[static_cast<std::size_t>(j)].get_mpz_t(), p.get_mpz_t()))
            return false;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), r[static_cast<std::size_t>(j)].get_mpz_t(), p.get_mpz_t());
        for (long c = 0; c < cols; ++c)
            r[static_cast<std::size_t>(c)] -= q * basis.at(found, c);
        row = found + 1;
    }
    for (const auto& x : r)
        if (sgn(x) != 0) return false;
    return true;
}

} // namespace witt
