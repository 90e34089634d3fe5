#pragma once

// Exact dense matrices and elimination kernels.
//
// The kernels in this header are OpenMP-parallel over rows; defectk::serial
// holds a plain single-threaded Gaussian elimination used as a test oracle
// and as the baseline in bench_kernels.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "defectk/numeric.hpp"

namespace defectk {

template <typename T>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static ExactMatrix identity(std::size_t n)
    {
        ExactMatrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    void append_row(const std::vector<T>& values)
    {
        if (rows_ == 0 && cols_ == 0) {
            cols_ = values.size();
        }
        if (values.size() != cols_) {
            throw std::invalid_argument("append_row: width mismatch");
        }
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    ExactMatrix transpose() const
    {
        ExactMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = ExactMatrix<Rational>;
using IntegerMatrix = ExactMatrix<Integer>;
using ModPMatrix = ExactMatrix<ModP>;

/// Scales every row by the lcm of its denominators (row space is unchanged).
IntegerMatrix clear_denominators(const RationalMatrix& m);

/// Entrywise reduction; nullopt if some denominator vanishes mod p.
std::optional<ModPMatrix> reduce_mod(const RationalMatrix& m, std::uint32_t p);

/// Fraction-free (Bareiss) rank, parallel row updates.
std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const ModPMatrix& m);

/// Rank over the selected backend. Over F_p a row whose reduction is undefined
/// makes the call fall back to Q.
std::size_t rank(const RationalMatrix& m, Field field);

/// Bareiss determinant of a square matrix.
Rational determinant(const RationalMatrix& m);
ModP determinant(const ModPMatrix& m);

struct Echelon {
    RationalMatrix basis;                 // reduced row-echelon rows, all nonzero
    std::vector<std::size_t> pivots;      // pivot column of each row
};

/// Reduced row-echelon form of the row space.
Echelon rref(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one row per free column, in column order.
RationalMatrix nullspace(const RationalMatrix& m);

/// Basis of {y : y^T m = 0} as integer rows (fraction-free elimination on [m | I]).
IntegerMatrix left_kernel(const IntegerMatrix& m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Inverse of a square matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

namespace serial {

/// Textbook rational Gaussian elimination, single-threaded.
std::size_t rank(const RationalMatrix& m);

/// Textbook Gauss-Jordan, single-threaded.
Echelon rref(const RationalMatrix& m);

} // namespace serial

} // namespace defectk
