#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kodaira/int_matrix.hpp"

namespace kodaira {

// U * M * V = S with U, V unimodular and S diagonal, each diagonal entry
// dividing the next, zeros trailing. Uinv and Vinv are carried along so
// kernels and lattice bases come out without a separate inversion.
struct SmithDecomposition {
    IntMatrix u, s, v;
    IntMatrix u_inv, v_inv;
    std::vector<BigInt> diagonal;  // length min(rows, cols)
    std::size_t rank = 0;          // number of nonzero diagonal entries
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[dst] += c * row[src]
inline void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.at(src, j).is_zero()) m.at(dst, j) += c * m.at(src, j);
}
// col[dst] += c * col[src]
inline void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!m.at(i, src).is_zero()) m.at(i, dst) += c * m.at(i, src);
}
inline void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j).negate();
}
inline void negate_col(IntMatrix& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, c).negate();
}

}  // namespace detail

// Deterministic Smith normal form: at each step the pivot is the nonzero
// entry of smallest absolute value in the trailing submatrix, ties broken
// by row-major scan order.
inline SmithDecomposition snf(const IntMatrix& m) {
    using namespace detail;
    const std::size_t r = m.rows(), c = m.cols();
    SmithDecomposition d;
    d.s = m;
    d.u = IntMatrix::identity(r);
    d.u_inv = IntMatrix::identity(r);
    d.v = IntMatrix::identity(c);
    d.v_inv = IntMatrix::identity(c);
    IntMatrix& s = d.s;

    auto row_op_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        swap_rows(s, a, b);
        swap_rows(d.u, a, b);
        swap_cols(d.u_inv, a, b);
    };
    auto col_op_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        swap_cols(s, a, b);
        swap_cols(d.v, a, b);
        swap_rows(d.v_inv, a, b);
    };
    auto row_op_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        add_row(s, dst, src, k);
        add_row(d.u, dst, src, k);
        add_col(d.u_inv, src, dst, -k);
    };
    auto col_op_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        add_col(s, dst, src, k);
        add_col(d.v, dst, src, k);
        add_row(d.v_inv, src, dst, -k);
    };
    auto row_op_negate = [&](std::size_t i) {
        negate_row(s, i);
        negate_row(d.u, i);
        negate_col(d.u_inv, i);
    };

    const std::size_t nmin = std::min(r, c);
    std::size_t t = 0;
    for (; t < nmin; ++t) {
        // minimal |entry| pivot in trailing submatrix, row-major scan
        bool found = false;
        std::size_t pi = t, pj = t;
        BigInt best;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                const BigInt& e = s.at(i, j);
                if (e.is_zero()) continue;
                BigInt a = e.abs();
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        row_op_swap(t, pi);
        col_op_swap(t, pj);

        for (;;) {
            // clear column t
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (s.at(i, t).is_zero()) continue;
                BigInt q = s.at(i, t) / s.at(t, t);
                if (!q.is_zero()) row_op_add(i, t, -q);
                if (!s.at(i, t).is_zero()) dirty = true;
            }
            // clear row t
            for (std::size_t j = t + 1; j < c; ++j) {
                if (s.at(t, j).is_zero()) continue;
                BigInt q = s.at(t, j) / s.at(t, t);
                if (!q.is_zero()) col_op_add(j, t, -q);
                if (!s.at(t, j).is_zero()) dirty = true;
            }
            if (dirty) {
                // a remainder smaller than the pivot appeared; re-pivot on it
                std::size_t qi = t, qj = t;
                BigInt b2 = s.at(t, t).abs();
                for (std::size_t i = t; i < r; ++i)
                    for (std::size_t j = t; j < c; ++j) {
                        const BigInt& e = s.at(i, j);
                        if (!e.is_zero() && e.abs() < b2) {
                            b2 = e.abs();
                            qi = i;
                            qj = j;
                        }
                    }
                row_op_swap(t, qi);
                col_op_swap(t, qj);
                continue;
            }
            // pivot must divide every remaining entry
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c && !fixed; ++j) {
                    if (!s.at(i, j).divisible_by(s.at(t, t))) {
                        row_op_add(t, i, BigInt(1));
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        if (s.at(t, t).sign() < 0) row_op_negate(t);
    }

    d.rank = t;
    d.diagonal.resize(nmin);
    for (std::size_t i = 0; i < nmin; ++i) d.diagonal[i] = s.at(i, i);
    return d;
}

// Basis of { x : M x = 0 } as matrix columns (cols x nullity).
inline IntMatrix kernel_basis(const IntMatrix& m) {
    SmithDecomposition d = snf(m);
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = d.rank; j < m.cols(); ++j) zero_cols.push_back(j);
    return d.v.columns(zero_cols);
}

// Basis for the lattice spanned by the columns of g, as matrix columns.
// The number of basis columns equals rank(g).
inline IntMatrix column_lattice_basis(const IntMatrix& g) {
    SmithDecomposition d = snf(g);
    IntMatrix basis(g.rows(), d.rank);
    for (std::size_t k = 0; k < d.rank; ++k)
        for (std::size_t i = 0; i < g.rows(); ++i)
            basis.at(i, k) = d.u_inv.at(i, k) * d.diagonal[k];
    return basis;
}

// Index [Z^n : L] for the lattice L spanned by the columns of g.
// Throws when L does not have full rank n = g.rows().
inline BigInt full_lattice_index(const IntMatrix& g) {
    SmithDecomposition d = snf(g);
    if (d.rank != g.rows())
        throw std::domain_error("full_lattice_index: lattice is not finite index");
    BigInt idx(1);
    for (std::size_t i = 0; i < d.rank; ++i) idx *= d.diagonal[i];
    return idx;
}

}  // namespace kodaira
