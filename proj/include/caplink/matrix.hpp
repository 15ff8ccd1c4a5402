#ifndef CAPLINK_MATRIX_HPP
#define CAPLINK_MATRIX_HPP

#include "caplink/rational.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace caplink {

// Dense matrix over an exact field (Rational or GaussianRational).
// Elimination pivots on the first nonzero entry; no magnitude concerns in
// exact arithmetic.
template <class F>
struct Mat {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    F& at(size_t i, size_t j) { return a[i * cols + j]; }
    const F& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    Mat<F> augmented_with(const Mat<F>& other) const {
        assert(rows == other.rows);
        Mat<F> m(rows, cols + other.cols);
        for (size_t i = 0; i < rows; ++i) {
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = at(i, j);
            for (size_t j = 0; j < other.cols; ++j) m.at(i, cols + j) = other.at(i, j);
        }
        return m;
    }
};

namespace detail {
inline bool entry_is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool entry_is_zero(const GaussianRational& v) { return v.is_zero(); }
} // namespace detail

template <class F>
size_t rank(Mat<F> m) {
    size_t r = 0;
    for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
        size_t piv = r;
        while (piv < m.rows && detail::entry_is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (size_t i = r + 1; i < m.rows; ++i) {
            if (detail::entry_is_zero(m.at(i, col))) continue;
            F f = m.at(i, col) / m.at(r, col);
            for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

template <class F>
F det(Mat<F> m) {
    assert(m.rows == m.cols);
    F d(1);
    for (size_t col = 0; col < m.cols; ++col) {
        size_t piv = col;
        while (piv < m.rows && detail::entry_is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) return F(0);
        if (piv != col) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (size_t i = col + 1; i < m.rows; ++i) {
            if (detail::entry_is_zero(m.at(i, col))) continue;
            F f = m.at(i, col) / m.at(col, col);
            for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

// Solve A X = B exactly. Returns nullopt when inconsistent or when A has
// deficient column rank (no unique solution).
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& A, const Mat<F>& B) {
    assert(A.rows == B.rows);
    Mat<F> m = A.augmented_with(B);
    size_t r = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < A.cols && r < m.rows; ++col) {
        size_t piv = r;
        while (piv < m.rows && detail::entry_is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || detail::entry_is_zero(m.at(i, col))) continue;
            F f = m.at(i, col) / m.at(r, col);
            for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    if (r < A.cols) return std::nullopt; // column-rank deficient
    for (size_t i = r; i < m.rows; ++i)
        for (size_t j = A.cols; j < m.cols; ++j)
            if (!detail::entry_is_zero(m.at(i, j))) return std::nullopt; // inconsistent
    Mat<F> X(A.cols, B.cols);
    for (size_t k = 0; k < r; ++k)
        for (size_t j = 0; j < B.cols; ++j)
            X.at(pivot_col[k], j) = m.at(k, A.cols + j) / m.at(k, pivot_col[k]);
    return X;
}

using RatMat = Mat<Rational>;
using GaussMat = Mat<GaussianRational>;

} // namespace caplink

#endif
