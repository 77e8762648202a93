#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osculum/errors.hpp"
#include "osculum/field.hpp"
#include "osculum/rational.hpp"

namespace osculum {

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }
    // Rows may be empty only if cols is given.
    static Matrix from_rows(const std::vector<std::vector<K>>& rows, std::size_t cols = 0) {
        if (!rows.empty()) cols = rows[0].size();
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<K> col(std::size_t j) const {
        std::vector<K> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    std::vector<std::vector<K>> row_list() const {
        std::vector<std::vector<K>> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void append_row(const std::vector<K>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw DimensionError("append_row: wrong length");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
        std::vector<K> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            K acc{};
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j)) && !is_zero(v[j])) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> data_;
};

using QMatrix = Matrix<Rational>;

template <class K>
struct Echelon {
    Matrix<K> reduced;  // only the nonzero rows
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination over the field K.
template <class K>
Echelon<K> rref(Matrix<K> m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, row);
        K inv = K(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!is_zero(m(row, c))) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            K f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    Matrix<K> reduced(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
    return rref(m).pivots.size();
}

// Rows form a basis of {x : m x = 0}.
template <class K>
Matrix<K> null_space(const Matrix<K>& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix<K> basis(m.cols() - e.pivots.size(), m.cols());
    std::size_t b = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        basis(b, f) = K(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(b, e.pivots[i]) = -e.reduced(i, f);
        ++b;
    }
    return basis;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix<K> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = K(1);
    }
    auto e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<K> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

// Some solution of a x = b, if one exists.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
    if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
    Matrix<K> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    std::vector<K> x(a.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
    return x;
}

template <class K>
K determinant(Matrix<K> m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    K det(1);
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return K(0);
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        K inv = K(1) / m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(m(r, c))) continue;
            K f = m(r, c) * inv;
            for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return det;
}

std::string to_string(const QMatrix& m);
QMatrix kronecker(const QMatrix& a, const QMatrix& b);

}  // namespace osculum
