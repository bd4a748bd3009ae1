#pragma once

// Exact rational linear algebra on small dense matrices.  Everything here is
// a free function over Eigen types with an exact scalar; no pivoting heuristics,
// no floats.

#include "zimt/common.hpp"

#include <optional>

namespace zimt::exactlin {

inline MatQ to_rational(const Mat& a) {
    MatQ r(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
    return r;
}

inline VecQ to_rational(const Vec& a) {
    VecQ r(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) r[i] = Rational(a[i]);
    return r;
}

// Row echelon in place; returns the rank.
template <typename Scalar>
int echelonize(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = row; r < rows; ++r) {
            if (m(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        for (Eigen::Index r = row + 1; r < rows; ++r) {
            if (m(r, col) == 0) continue;
            Scalar f = m(r, col) / m(row, col);
            for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
        }
        ++row;
    }
    return static_cast<int>(row);
}

inline int rank_of(const Mat& a) {
    MatQ m = to_rational(a);
    return echelonize(m);
}

// Rank of the matrix whose rows are the given vectors (empty set has rank 0).
inline int rank_of_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    Mat m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    return rank_of(m);
}

// Is v in the row span of `rows`?
inline bool in_row_span(const std::vector<Vec>& rows, const Vec& v) {
    const int base = rank_of_rows(rows);
    std::vector<Vec> ext = rows;
    ext.push_back(v);
    return rank_of_rows(ext) == base;
}

// Unique solution of A x = b when A has full column rank; nullopt if inconsistent.
inline std::optional<VecQ> solve(const Mat& a, const Vec& b) {
    const Eigen::Index n = a.cols();
    MatQ m(a.rows(), n + 1);
    m.leftCols(n) = to_rational(a);
    m.col(n) = to_rational(b);
    MatQ work = m;
    echelonize(work);
    // Back substitution over the echelon form.
    VecQ x = VecQ::Zero(n);
    Eigen::Index r = work.rows() - 1;
    // Locate pivot columns bottom-up.
    std::vector<Eigen::Index> pivot_col(work.rows(), -1);
    for (Eigen::Index i = 0; i < work.rows(); ++i) {
        for (Eigen::Index j = 0; j < work.cols(); ++j) {
            if (work(i, j) != 0) {
                pivot_col[i] = j;
                break;
            }
        }
    }
    for (r = work.rows() - 1; r >= 0; --r) {
        Eigen::Index p = pivot_col[r];
        if (p < 0) continue;
        if (p == n) return std::nullopt;  // 0 = nonzero row: inconsistent
        Rational s = work(r, n);
        for (Eigen::Index j = p + 1; j < n; ++j) s -= work(r, j) * x[j];
        x[p] = s / work(r, p);
    }
    return x;
}

// Exact inverse of a square rational matrix (throws on singular input).
inline MatQ inverse(const MatQ& a) {
    const Eigen::Index n = a.rows();
    MatQ aug(n, 2 * n);
    aug.leftCols(n) = a;
    aug.rightCols(n) = MatQ::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = 1;
    // Gauss-Jordan.
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = col; r < n; ++r) {
            if (aug(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) throw DomainError("exactlin::inverse: singular matrix");
        if (piv != col) aug.row(piv).swap(aug.row(col));
        Rational d = aug(col, col);
        for (Eigen::Index c = 0; c < 2 * n; ++c) aug(col, c) /= d;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || aug(r, col) == 0) continue;
            Rational f = aug(r, col);
            for (Eigen::Index c = 0; c < 2 * n; ++c) aug(r, c) -= f * aug(col, c);
        }
    }
    return aug.rightCols(n);
}

}  // namespace zimt::exactlin
