#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "drtk/rational.hpp"

namespace drtk {

/// Dense row-major matrix over an arbitrary field scalar (Rat or double).
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Matrix operator*(const T& s, Matrix m) {
        m *= s;
        return m;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        assert(v.size() == cols_);
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    T trace() const {
        assert(rows_ == cols_);
        T t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!(x == T(0))) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RatMat = Matrix<Rat>;
using DMat = Matrix<double>;

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == T(0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    assert(a.size() == b.size());
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <class T>
T norm2(const std::vector<T>& a) {
    return dot(a, a);
}

template <class T>
std::vector<T> axpy(const T& c, const std::vector<T>& x, const std::vector<T>& y) {
    assert(x.size() == y.size());
    std::vector<T> r(y);
    for (std::size_t i = 0; i < x.size(); ++i) r[i] += c * x[i];
    return r;
}

template <class T>
std::vector<T> operator+(const std::vector<T>& a, const std::vector<T>& b) {
    return axpy(T(1), a, b);
}
template <class T>
std::vector<T> operator-(const std::vector<T>& a, const std::vector<T>& b) {
    return axpy(T(-1), b, a);
}
template <class T>
std::vector<T> operator*(const T& c, std::vector<T> a) {
    for (auto& x : a) x *= c;
    return a;
}

/// Row echelon rank over an exact field.
template <class T>
std::size_t exact_rank(Matrix<T> m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, col) == T(0)) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
        const T p = m(rank, col);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, col) == T(0)) continue;
            const T f = m(i, col) / p;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Basis of the null space {x : m x = 0} over an exact field.
template <class T>
std::vector<std::vector<T>> exact_kernel(Matrix<T> m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, col) == T(0)) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(rank, j));
        const T p = m(rank, col);
        for (std::size_t j = 0; j < n; ++j) m(rank, j) /= p;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col) == T(0)) continue;
            const T f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<T> v(n, T(0));
        v[freec] = T(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m(r, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve A x = b over an exact field; throws if A is singular.
template <class T>
std::vector<T> exact_solve(Matrix<T> a, std::vector<T> b) {
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::invalid_argument("exact_solve: shape mismatch");
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == T(0)) ++piv;
        if (piv == n) throw std::domain_error("exact_solve: singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            std::swap(b[piv], b[col]);
        }
        const T p = a(col, col);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == T(0)) continue;
            const T f = a(i, col) / p;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            b[i] -= f * b[col];
        }
    }
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
    return x;
}

/// Determinant by fraction-free elimination (exact field).
template <class T>
T exact_det(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("exact_det: square matrix required");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == T(0)) ++piv;
        if (piv == n) return T(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const T p = m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == T(0)) continue;
            const T f = m(i, col) / p;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

inline DMat to_double(const RatMat& m) {
    DMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_double(m(i, j));
    return r;
}

inline std::vector<double> to_double(const std::vector<Rat>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_double(v[i]);
    return r;
}

} // namespace drtk
