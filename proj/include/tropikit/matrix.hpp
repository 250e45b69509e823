#pragma once

#include "tropikit/rational.hpp"

#include <algorithm>
#include <optional>

namespace tropikit {

template <class T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), T(0)) {}

    T& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

    static Mat identity(int n)
    {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Mat from_rows(const std::vector<std::vector<T>>& rows_in)
    {
        if (rows_in.empty()) return Mat(0, 0);
        Mat m(int(rows_in.size()), int(rows_in[0].size()));
        for (int i = 0; i < m.rows; ++i) {
            if (int(rows_in[i].size()) != m.cols)
                throw std::invalid_argument("ragged row list");
            for (int j = 0; j < m.cols; ++j) m(i, j) = rows_in[i][j];
        }
        return m;
    }

    std::vector<T> row(int i) const
    {
        std::vector<T> r(cols);
        for (int j = 0; j < cols; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<T> col(int j) const
    {
        std::vector<T> c(rows);
        for (int i = 0; i < rows; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_row(int i, const std::vector<T>& r)
    {
        for (int j = 0; j < cols; ++j) (*this)(i, j) = r[j];
    }

    Mat transposed() const
    {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const Mat& o) const
    {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

using ZMat = Mat<Int>;
using QMat = Mat<Rational>;

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y)
{
    if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
    Mat<T> z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

template <class T>
std::vector<T> operator*(const Mat<T>& m, const std::vector<T>& v)
{
    if (m.cols != int(v.size())) throw std::invalid_argument("matvec: shape mismatch");
    std::vector<T> out(m.rows, T(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
    return out;
}

inline QMat to_qmat(const ZMat& m)
{
    QMat q(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) q(i, j) = Rational(m(i, j));
    return q;
}

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(QMat& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.a[size_t(r) * m.cols + j], m.a[size_t(p) * m.cols + j]);
        Rational inv = 1 / m(r, c);
        for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(QMat m) { return int(rref(m).size()); }
inline int rank(const ZMat& m) { return rank(to_qmat(m)); }

inline Rational det(QMat m)
{
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    Rational d = 1;
    for (int c = 0; c < m.cols; ++c) {
        int p = -1;
        for (int i = c; i < m.rows; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) return Rational(0);
        if (p != c) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.a[size_t(c) * m.cols + j], m.a[size_t(p) * m.cols + j]);
            d = -d;
        }
        d *= m(c, c);
        Rational inv = 1 / m(c, c);
        for (int i = c + 1; i < m.rows; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) * inv;
            for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

inline Int det(const ZMat& m)
{
    Rational d = det(to_qmat(m));
    return rat_num(d);
}

// Rows of the result span the null space {x : m x = 0}.
inline QMat kernel_basis(QMat m)
{
    const int n = m.cols;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    QMat k(n - int(pivots.size()), n);
    int kr = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        k(kr, c) = 1;
        for (int r = 0; r < int(pivots.size()); ++r) k(kr, pivots[r]) = -m(r, c);
        ++kr;
    }
    return k;
}

// One solution of A x = b, if consistent.
inline std::optional<QVec> solve(const QMat& A, const QVec& b)
{
    QMat aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
        aug(i, A.cols) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    QVec x(A.cols, Rational(0));
    for (int r = 0; r < int(pivots.size()); ++r) x[pivots[r]] = aug(r, A.cols);
    return x;
}

inline QMat inverse(const QMat& m)
{
    if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
    const int n = m.rows;
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (int(pivots.size()) != n || pivots[n - 1] != n - 1)
        throw std::invalid_argument("inverse: singular matrix");
    QMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline ZMat z_inverse_unimodular(const ZMat& m)
{
    QMat inv = inverse(to_qmat(m));
    ZMat out(inv.rows, inv.cols);
    for (int i = 0; i < inv.rows; ++i)
        for (int j = 0; j < inv.cols; ++j) {
            if (rat_den(inv(i, j)) != 1)
                throw std::invalid_argument("z_inverse_unimodular: matrix not unimodular");
            out(i, j) = rat_num(inv(i, j));
        }
    return out;
}

// Stacks b under a (column counts must match).
template <class T>
Mat<T> vstack(const Mat<T>& a, const Mat<T>& b)
{
    if (a.rows == 0) return b;
    if (b.rows == 0) return a;
    if (a.cols != b.cols) throw std::invalid_argument("vstack: column mismatch");
    Mat<T> out(a.rows + b.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out(i, j) = a(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) out(a.rows + i, j) = b(i, j);
    return out;
}

} // namespace tropikit
