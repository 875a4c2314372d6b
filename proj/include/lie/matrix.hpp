#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lie/error.hpp"
#include "lie/rational.hpp"

namespace lie {

// Dense matrix over an exact scalar type (Rat, CRat, Rat2, polynomials).
// Row-major storage, value semantics.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), v_(r * c) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : v_) if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < v_.size(); ++k) m.v_[k] = -v_[k];
        return m;
    }
    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : v_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
    friend Matrix operator*(Matrix a, const T& s) { a *= s; return a; }
    friend Matrix operator*(const T& s, Matrix a) { a *= s; return a; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(Error::Kind::invalid_argument, "Matrix: shape mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    c(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) fail(Error::Kind::invalid_argument, "Matrix::apply: shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        Matrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
        return m;
    }

    friend Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
    friend Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            fail(Error::Kind::invalid_argument, "Matrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> v_;
};

// Fraction-free (Bareiss) determinant; valid over any integral domain with
// exact division (Rat, polynomials). Throws nothing; returns T(0) for
// singular input.
template <typename T>
T bareiss_det(Matrix<T> m) {
    if (m.rows() != m.cols()) fail(Error::Kind::invalid_argument, "det: not square");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    T prev{};
    bool have_prev = false; // first step has no divisor
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = have_prev ? num / prev : num;
            }
        prev = m(k, k);
        have_prev = true;
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

// Row echelon over a field; returns rank. If `pivot_cols` is non-null it
// receives the pivot column indices (first-nonzero pivoting).
template <typename T>
std::size_t row_reduce(Matrix<T>& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m(p, c).is_zero()) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(r, j), m(p, j));
        T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < C; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < C; ++j) m(i, j) -= f * m(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

template <typename T>
std::size_t rank(Matrix<T> m) {
    return row_reduce(m);
}

// Basis of the right kernel {x : m x = 0}, as columns.
template <typename T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m) {
    std::vector<std::size_t> piv;
    row_reduce(m, &piv);
    const std::size_t C = m.cols();
    std::vector<bool> is_piv(C, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        std::vector<T> x(C, T(0));
        x[f] = T(1);
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

// Solves m x = b over a field. Returns false if inconsistent.
template <typename T>
bool solve(Matrix<T> m, std::vector<T> b, std::vector<T>& x) {
    const std::size_t R = m.rows(), C = m.cols();
    Matrix<T> aug(R, C + 1);
    for (std::size_t i = 0; i < R; ++i) {
        for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
        aug(i, C) = b[i];
    }
    std::vector<std::size_t> piv;
    // Reduce only on the first C columns.
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && aug(p, c).is_zero()) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j <= C; ++j) std::swap(aug(r, j), aug(p, j));
        T inv = T(1) / aug(r, c);
        for (std::size_t j = c; j <= C; ++j) aug(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || aug(i, c).is_zero()) continue;
            T f = aug(i, c);
            for (std::size_t j = c; j <= C; ++j) aug(i, j) -= f * aug(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < R; ++i)
        if (!aug(i, C).is_zero()) return false;
    x.assign(C, T(0));
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(k, C);
    return true;
}

// Exact positive semidefiniteness of a symmetric rational matrix, by pivoted
// rational LDL^T: a negative diagonal entry refutes, an all-zero diagonal
// with nonzero off-diagonal entries refutes, otherwise pivot and recurse on
// the Schur complement.
bool is_positive_semidefinite(Matrix<Rat> m);

// Exact positive definiteness: all leading principal minors positive.
bool is_positive_definite(const Matrix<Rat>& m);

} // namespace lie
