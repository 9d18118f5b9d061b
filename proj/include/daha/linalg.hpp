#pragma once

#include <Eigen/Dense>

#include "daha/scalars.hpp"

namespace daha {

// compound ops so the exact scalars behave inside Eigen kernels
inline QTScalar& operator+=(QTScalar& a, const QTScalar& b) { return a = a + b; }
inline QTScalar& operator-=(QTScalar& a, const QTScalar& b) { return a = a - b; }
inline QTScalar& operator*=(QTScalar& a, const QTScalar& b) { return a = a * b; }
inline CycScalar& operator+=(CycScalar& a, const CycScalar& b) { return a = a + b; }
inline CycScalar& operator-=(CycScalar& a, const CycScalar& b) { return a = a - b; }
inline CycScalar& operator*=(CycScalar& a, const CycScalar& b) { return a = a * b; }

} // namespace daha

namespace Eigen {

template <>
struct NumTraits<daha::QTScalar> : GenericNumTraits<daha::QTScalar> {
    typedef daha::QTScalar Real;
    typedef daha::QTScalar NonInteger;
    typedef daha::QTScalar Nested;
    typedef daha::QTScalar Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64,
    };
    static inline Real epsilon() { return daha::QTScalar(0l); }
    static inline Real dummy_precision() { return daha::QTScalar(0l); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<daha::CycScalar> : GenericNumTraits<daha::CycScalar> {
    typedef daha::CycScalar Real;
    typedef daha::CycScalar NonInteger;
    typedef daha::CycScalar Nested;
    typedef daha::CycScalar Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64,
    };
    static inline Real epsilon() { return daha::CycScalar(); }
    static inline Real dummy_precision() { return daha::CycScalar(); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace daha {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;
template <class K>
using RowVec = Eigen::Matrix<K, 1, Eigen::Dynamic>;

template <class K>
Mat<K> zero_mat(int r, int c, const K& zero) {
    Mat<K> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = zero;
    return m;
}

template <class K>
Mat<K> identity_mat(int n, const K& zero, const K& one) {
    Mat<K> m = zero_mat(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

template <class K>
bool is_zero_mat(const Mat<K>& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

// exact Gauss-Jordan inverse; throws SingularMatrix
template <class K>
Mat<K> exact_inverse(Mat<K> a, const K& zero, const K& one) {
    const int n = static_cast<int>(a.rows());
    Mat<K> inv = identity_mat(n, zero, one);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (!a(r, col).is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) fail(Err::SingularMatrix, "matrix is not invertible");
        if (piv != col) {
            a.row(piv).swap(a.row(col));
            inv.row(piv).swap(inv.row(col));
        }
        K d = a(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a(col, j) = a(col, j) * d;
            inv(col, j) = inv(col, j) * d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            K f = a(r, col);
            for (int j = 0; j < n; ++j) {
                a(r, j) = a(r, j) - f * a(col, j);
                inv(r, j) = inv(r, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

template <class K>
K exact_det(Mat<K> a, const K& zero, const K& one) {
    const int n = static_cast<int>(a.rows());
    K det = one;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (!a(r, col).is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return zero;
        if (piv != col) {
            a.row(piv).swap(a.row(col));
            det = -det;
        }
        det = det * a(col, col);
        K d = a(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            K f = a(r, col) * d;
            for (int j = col; j < n; ++j) a(r, j) = a(r, j) - f * a(col, j);
        }
    }
    return det;
}

template <class K>
int exact_rank(Mat<K> a) {
    const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (!a(r, col).is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank) a.row(piv).swap(a.row(rank));
        K d = a(rank, col).inverse();
        for (int r = rank + 1; r < rows; ++r) {
            if (a(r, col).is_zero()) continue;
            K f = a(r, col) * d;
            for (int j = col; j < cols; ++j) a(r, j) = a(r, j) - f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace daha
