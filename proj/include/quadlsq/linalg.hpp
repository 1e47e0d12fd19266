#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "quadlsq/dd.hpp"

namespace quadlsq {

using Vector = std::vector<double>;

/// Dense row-major matrix, sized for the small systems this library builds.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    [[nodiscard]] std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Backward substitution on an upper-triangular system, entirely in
/// double-double. Throws NumericalError("singular diagonal") on a zero pivot.
[[nodiscard]] ExtVector solve_upper(const Matrix<DoubleDouble>& upper, std::span<const DoubleDouble> rhs);

/// Inverse of an upper-triangular matrix, one backward substitution per unit vector.
[[nodiscard]] Matrix<DoubleDouble> invert_upper(const Matrix<DoubleDouble>& upper);

[[nodiscard]] Matrix<double> to_doubles(const Matrix<DoubleDouble>& m);

/// Maximum absolute row sum.
[[nodiscard]] double norm_inf(const Matrix<double>& m);
/// Maximum absolute column sum.
[[nodiscard]] double norm_1(const Matrix<double>& m);

}  // namespace quadlsq
