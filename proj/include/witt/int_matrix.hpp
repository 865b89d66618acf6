#pragma once

#include <gmpxx.h>

#include <vector>

#include "witt/error.hpp"

namespace witt {

// Exact integer matrices, sized for the lattices in scope (<= 64x64).

class IntMatrix {
public:
    IntMatrix(long rows, long cols);
    static IntMatrix identity(long n);
    static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    mpz_class& at(long r, long c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
    const mpz_class& at(long r, long c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    void swap_rows(long i, long j);
    void swap_cols(long i, long j);
    void add_row_multiple(long dst, long src, const mpz_class& k); // row dst += k * row src
    void add_col_multiple(long dst, long src, const mpz_class& k);
    void negate_row(long i);
    void negate_col(long i);

    // Fraction-free (Bareiss) determinant; square only.
    mpz_class determinant() const;

private:
    long rows_, cols_;
    std::vector<mpz_class> e_;
};

// d = u * m * v with u, v unimodular, d diagonal, and the nonzero
// diagonal entries d_1 | d_2 | ... positive.  certified is set after the
// transforms have been re-multiplied against the input.
struct SmithNormalForm {
    IntMatrix d, u, v;
    std::vector<mpz_class> invariant_factors;
    bool certified = false;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

// Canonical row-style Hermite form of the lattice spanned by the given
// row vectors: pivots positive, entries above each pivot reduced into
// [0, pivot), zero rows dropped.  Column j's pivot (when present) sits
// on the echelon staircase.
IntMatrix hermite_row_basis(const std::vector<std::vector<mpz_class>>& gens, long cols);

// Membership of v in the row span of a Hermite basis.
bool lattice_contains(const IntMatrix& hermite_basis, const std::vector<mpz_class>& v);

} // namespace witt
