#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cohfun/ring.hpp"

namespace cohfun {

/// Dense rows x cols matrix over a BaseRing. Zero-dimensional shapes are
/// ordinary values. Entries are always stored reduced.
class Matrix {
public:
    Matrix() = default;
    Matrix(BaseRing ring, std::size_t rows, std::size_t cols);

    static Matrix identity(BaseRing ring, std::size_t n);
    static Matrix from_rows(BaseRing ring, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_rows(BaseRing ring, const std::vector<std::vector<Int>>& rows, std::size_t cols_if_empty = 0);
    static Matrix diagonal(BaseRing ring, std::size_t rows, std::size_t cols, const std::vector<Int>& diag);
    static Matrix column_vector(BaseRing ring, const std::vector<Int>& entries);

    const BaseRing& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    /// Stores ring.reduce(v).
    void set(std::size_t i, std::size_t j, const Int& v);

    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    Matrix column(std::size_t j) const { return columns(j, 1); }
    Matrix columns(std::size_t first, std::size_t count) const;
    Matrix row_range(std::size_t first, std::size_t count) const;
    Matrix select_columns(const std::vector<std::size_t>& idx) const;
    Matrix scaled(const Int& c) const;

    static Matrix hcat(const Matrix& a, const Matrix& b);
    static Matrix vcat(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const Matrix& a, const Matrix& b);
    static Matrix kron(const Matrix& a, const Matrix& b);

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Row-major list-of-lists, e.g. [[2,0],[0,3]]; empty shapes render as
    /// [](RxC).
    std::string str() const;

    // Raw access for the elimination kernels.
    Int* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const Int* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

private:
    BaseRing ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

namespace kernels {

/// Reference triple loop.
Matrix multiply_serial(const Matrix& a, const Matrix& b);
/// OpenMP-parallel over output rows; bit-identical to multiply_serial.
Matrix multiply_parallel(const Matrix& a, const Matrix& b);
/// Work (rows*cols*inner) above which operator* switches to the parallel
/// kernel.
inline constexpr std::size_t kParallelMultiplyThreshold = 1u << 15;

}  // namespace kernels

}  // namespace cohfun
