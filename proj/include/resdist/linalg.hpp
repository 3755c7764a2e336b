#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "resdist/matrix.hpp"
#include "resdist/rational.hpp"

namespace resdist {

/// Exact determinant. Clears denominators row by row, runs fraction-free
/// (Bareiss) elimination on the resulting integer matrix, and rescales.
/// The empty 0x0 matrix has determinant 1 (empty product convention).
inline Rat det(const RatMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("det: matrix is " + a.shape_string() + ", not square");
    const int n = a.rows();
    if (n == 0) return Rat(1);

    std::vector<mpz_class> m(static_cast<size_t>(n) * n);
    mpz_class scale(1);
    for (int i = 0; i < n; ++i) {
        mpz_class row_lcm(1);
        for (int j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
                                            a(i, j).den().get_mpz_t());
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i) * n + j] = a(i, j).num() * (row_lcm / a(i, j).den());
        scale *= row_lcm;
    }

    auto at = [&](int i, int j) -> mpz_class& { return m[static_cast<size_t>(i) * n + j]; };
    mpz_class prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (at(i, k) != 0) { pivot = i; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    mpz_class d = at(n - 1, n - 1);
    if (sign < 0) d = -d;
    mpq_class q(d);
    q /= mpq_class(scale);
    return Rat(std::move(q));
}

/// Exact inverse by Gauss-Jordan elimination on [A | I].
/// Throws std::domain_error when the matrix is singular.
inline RatMatrix inverse(const RatMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("inverse: matrix is " + a.shape_string() + ", not square");
    const int n = a.rows();
    RatMatrix w = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!w(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) throw std::domain_error("inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w(col, j), w(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        const Rat p = w(col, col);
        for (int j = 0; j < n; ++j) {
            w(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || w(i, col).is_zero()) continue;
            const Rat f = w(i, col);
            for (int j = 0; j < n; ++j) {
                w(i, j) -= f * w(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Copy of `a` with the given 0-based rows and columns removed.
inline RatMatrix delete_rows_cols(const RatMatrix& a, const std::set<int>& rows,
                                  const std::set<int>& cols) {
    for (int r : rows)
        if (r < 0 || r >= a.rows())
            throw std::out_of_range("delete_rows_cols: row " + std::to_string(r) +
                                    " outside " + a.shape_string());
    for (int c : cols)
        if (c < 0 || c >= a.cols())
            throw std::out_of_range("delete_rows_cols: col " + std::to_string(c) +
                                    " outside " + a.shape_string());
    RatMatrix out(a.rows() - static_cast<int>(rows.size()),
                  a.cols() - static_cast<int>(cols.size()));
    int oi = 0;
    for (int i = 0; i < a.rows(); ++i) {
        if (rows.count(i)) continue;
        int oj = 0;
        for (int j = 0; j < a.cols(); ++j) {
            if (cols.count(j)) continue;
            out(oi, oj++) = a(i, j);
        }
        ++oi;
    }
    return out;
}

struct Rref {
    RatMatrix r;
    std::vector<int> pivot_cols;
};

/// Reduced row echelon form with the list of pivot columns.
inline Rref rref(const RatMatrix& a) {
    Rref out{a, {}};
    RatMatrix& m = out.r;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
        const Rat p = m(row, col);
        for (int j = 0; j < m.cols(); ++j) m(row, j) /= p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rat f = m(i, col);
            for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    return out;
}

/// Full-rank factorization A = F * G with F of shape m x r and G of shape
/// r x n, where r = rank(A). A zero matrix yields r = 0 with empty factors.
struct RankFactorization {
    RatMatrix f;
    RatMatrix g;
    int rank = 0;
};

inline RankFactorization rank_factorization(const RatMatrix& a) {
    const Rref rr = rref(a);
    const int r = static_cast<int>(rr.pivot_cols.size());
    RankFactorization out;
    out.rank = r;
    out.f = RatMatrix(a.rows(), r);
    out.g = RatMatrix(r, a.cols());
    for (int t = 0; t < r; ++t)
        for (int i = 0; i < a.rows(); ++i) out.f(i, t) = a(i, rr.pivot_cols[t]);
    for (int t = 0; t < r; ++t)
        for (int j = 0; j < a.cols(); ++j) out.g(t, j) = rr.r(t, j);
    return out;
}

/// Verifies the four defining pseudoinverse identities exactly:
/// A X A = A,  X A X = X,  (A X)^T = A X,  (X A)^T = X A.
inline bool penrose_check(const RatMatrix& a, const RatMatrix& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw std::invalid_argument("penrose_check: candidate is " + x.shape_string() +
                                    ", expected " + std::to_string(a.cols()) + "x" +
                                    std::to_string(a.rows()));
    const RatMatrix ax = a * x;
    const RatMatrix xa = x * a;
    return ax * a == a && xa * x == x && transpose(ax) == ax && transpose(xa) == xa;
}

/// Moore-Penrose pseudoinverse over the rationals via full-rank
/// factorization: if A = F G then A^+ = G^T (G G^T)^-1 (F^T F)^-1 F^T.
/// The inner Gram matrices are invertible because F has full column rank
/// and G has full row rank. A zero matrix maps to the zero matrix of the
/// transposed shape (the r = 0 products collapse to it naturally).
inline RatMatrix pinv_general(const RatMatrix& a) {
    const RankFactorization rf = rank_factorization(a);
    const RatMatrix ft = transpose(rf.f);
    const RatMatrix gt = transpose(rf.g);
    return gt * inverse(rf.g * gt) * inverse(ft * rf.f) * ft;
}

/// Block-diagonal stack: [a 0; 0 c].
inline RatMatrix block_diag(const RatMatrix& a, const RatMatrix& c) {
    RatMatrix out(a.rows() + c.rows(), a.cols() + c.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) out(a.rows() + i, a.cols() + j) = c(i, j);
    return out;
}

/// Pseudoinverse of a block-diagonal matrix, assembled blockwise:
/// diag(A, C)^+ = diag(A^+, C^+).
inline RatMatrix block_diag_pinv(const RatMatrix& a, const RatMatrix& c) {
    return block_diag(pinv_general(a), pinv_general(c));
}

}  // namespace resdist
