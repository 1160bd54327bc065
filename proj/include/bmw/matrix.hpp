#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bmw {

/// Dense row-major matrix. The zero element is supplied by the caller so
/// that ball matrices can carry a precision.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& zero) : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<T>& data() const { return data_; }
    const T& zero() const { return zero_; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same(b);
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same(b);
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix out(a.rows_, b.cols_, a.zero_like());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (is_structural_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
            }
        return out;
    }
    Matrix scaled(const T& c) const {
        Matrix out = *this;
        for (auto& x : out.data_) x = x * c;
        return out;
    }
    Matrix transposed() const {
        Matrix out(cols_, rows_, zero_like());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_same(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }
    const T& zero_like() const { return zero_; }
    template <class U>
    static bool is_structural_zero(const U& x) {
        if constexpr (requires { x.is_zero(); }) return x.is_zero();
        else if constexpr (requires { x.is_exact(); x.contains_zero(); }) return x.is_exact() && x.contains_zero();
        else return false;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

}  // namespace bmw

namespace bmw {

/// Determinant over an exact field by Gaussian elimination.
template <class T>
T determinant(Matrix<T> a, const T& one) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    T det = one;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == a.zero()) ++piv;
        if (piv == n) return a.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            det = a.zero() - det;
        }
        det = det * a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == a.zero()) continue;
            const T f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
        }
    }
    return det;
}

/// Solve a·x = b over an exact field; throws when a is singular.
template <class T>
std::vector<T> solve(Matrix<T> a, std::vector<T> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == a.zero()) ++piv;
        if (piv == n) throw std::domain_error("solve: singular matrix");
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            std::swap(b[piv], b[c]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == a.zero()) continue;
            const T f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
            b[i] = b[i] - f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] = b[i] / a(i, i);
    return b;
}

}  // namespace bmw
