#pragma once

#include "radic/bigint.hpp"
#include "radic/combinatorics.hpp"
#include "radic/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace radic {

enum class ScalarKind { exact, floating };

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_)
            throw UsageError("matrix data has " + std::to_string(data_.size()) +
                             " entries, expected " + std::to_string(rows_ * cols_));
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw UsageError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<const T> data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<BigInt>;
using FloatMatrix = Matrix<double>;

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Runs in 64-bit arithmetic while every intermediate fits and restarts in
/// arbitrary precision otherwise. Throws UsageError for non-square input.
BigInt det_square_exact(const ExactMatrix& a);

/// Determinant by Gaussian elimination with partial pivoting on the largest
/// magnitude, ties to the lowest row. Overflow yields +-inf.
double det_square_float(const FloatMatrix& a);

/// Columns `c` of `a`, in order. Requires a.rows() == c.size() and c[i] <= a.cols().
template <typename T>
Matrix<T> extract_submatrix(const Matrix<T>& a, const Combination& c)
{
    const auto m = static_cast<std::size_t>(c.size());
    if (a.rows() != m)
        throw UsageError("combination of size " + std::to_string(m) + " used on a matrix with " +
                         std::to_string(a.rows()) + " rows");
    if (m > 0 && static_cast<std::size_t>(c[m - 1]) > a.cols())
        throw UsageError("column " + std::to_string(c[m - 1]) + " exceeds matrix width " +
                         std::to_string(a.cols()));
    Matrix<T> out(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t t = 0; t < m; ++t)
            out(r, t) = a(r, static_cast<std::size_t>(c[t] - 1));
    return out;
}

namespace kernel {

/// Bareiss on an m x m row-major int64 buffer, destroyed in the process.
/// nullopt when an intermediate would leave the int64 range.
std::optional<std::int64_t> bareiss_i64(std::span<std::int64_t> a, std::size_t m) noexcept;

/// Bareiss on an m x m row-major buffer of big integers, destroyed in the process.
BigInt bareiss(std::span<BigInt> a, std::size_t m);

/// Pivoted elimination on an m x m row-major buffer, destroyed in the process.
double pivoted_elimination(std::span<double> a, std::size_t m) noexcept;

} // namespace kernel

} // namespace radic
