/**
 * @file matrix.hpp
 * @brief Dense row-major matrix used for representation matrices.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mdspline {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    [[nodiscard]] static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    T* row(std::size_t i) { return data_.data() + i * cols_; }
    const T* row(std::size_t i) const { return data_.data() + i * cols_; }

    /// First and one-past-last nonzero column of row i (0,0 for a zero row).
    [[nodiscard]] std::pair<std::size_t, std::size_t> row_band(std::size_t i) const {
        std::size_t lo = cols_, hi = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != T(0)) {
                if (lo == cols_) lo = j;
                hi = j + 1;
            }
        }
        if (lo == cols_) return {0, 0};
        return {lo, hi};
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// y = M x
template <class T>
[[nodiscard]] std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& x) {
    if (m.cols() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<T> y(m.rows(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const T* r = m.row(i);
        T acc(0);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (r[j] != T(0)) acc += r[j] * x[j];
        }
        y[i] = acc;
    }
    return y;
}

/// Elementwise conversion between scalar types.
template <class U, class T, class F>
[[nodiscard]] Matrix<U> convert_matrix(const Matrix<T>& m, F&& f) {
    Matrix<U> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
    return out;
}

}  // namespace mdspline
