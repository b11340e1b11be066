#include "cohfun/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace cohfun {

namespace {

void require_same_ring(const Matrix& a, const Matrix& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("matrices over different rings");
}

}  // namespace

Matrix::Matrix(BaseRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(BaseRing ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(BaseRing ring, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(ring, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m.set(i, j++, Int(v));
        ++i;
    }
    return m;
}

Matrix Matrix::from_rows(BaseRing ring, const std::vector<std::vector<Int>>& rows, std::size_t cols_if_empty) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.front().size() : cols_if_empty;
    Matrix m(ring, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix literal");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::diagonal(BaseRing ring, std::size_t rows, std::size_t cols, const std::vector<Int>& diag) {
    Matrix m(ring, rows, cols);
    for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) m.set(i, i, diag[i]);
    return m;
}

Matrix Matrix::column_vector(BaseRing ring, const std::vector<Int>& entries) {
    Matrix m(ring, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Int& v) { data_[i * cols_ + j] = ring_.reduce(v); }

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw std::out_of_range("column range");
    Matrix m(ring_, rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m.data_[i * count + j] = (*this)(i, first + j);
    return m;
}

Matrix Matrix::row_range(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw std::out_of_range("row range");
    Matrix m(ring_, count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.data_[i * cols_ + j] = (*this)(first + i, j);
    return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(ring_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m.data_[i * idx.size() + j] = (*this)(i, idx[j]);
    return m;
}

Matrix Matrix::scaled(const Int& c) const {
    Matrix m(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = ring_.mul(c, data_[k]);
    return m;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    if (a.rows_ != b.rows_) throw std::invalid_argument("hcat: row mismatch");
    Matrix m(a.ring_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) m.data_[i * m.cols_ + j] = a(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) m.data_[i * m.cols_ + a.cols_ + j] = b(i, j);
    }
    return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    if (a.cols_ != b.cols_) throw std::invalid_argument("vcat: column mismatch");
    Matrix m(a.ring_, a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
    return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    Matrix m(a.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) m.data_[i * m.cols_ + j] = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) m.data_[(a.rows_ + i) * m.cols_ + a.cols_ + j] = b(i, j);
    return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    Matrix m(a.ring_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l)
                    m.set(i * b.rows_ + k, j * b.cols_ + l, a(i, j) * b(k, l));
        }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = ring_.neg(data_[k]);
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix add: shape mismatch");
    Matrix m(a.ring_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.ring_.add(a.data_[k], b.data_[k]);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
    Matrix m(a.ring_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.ring_.sub(a.data_[k], b.data_[k]);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.rows_ * a.cols_ * b.cols_ >= kernels::kParallelMultiplyThreshold) return kernels::multiply_parallel(a, b);
    return kernels::multiply_serial(a, b);
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
    std::ostringstream os;
    if (rows_ == 0 || cols_ == 0) {
        os << "[](" << rows_ << "x" << cols_ << ")";
        return os.str();
    }
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace kernels {

namespace {

void check_product_shape(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimension mismatch");
}

void multiply_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
    const BaseRing& ring = a.ring();
    Int* out = c.row_ptr(i);
    const Int* arow = a.row_ptr(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
        if (arow[k] == 0) continue;
        const Int* brow = b.row_ptr(k);
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (brow[j] != 0) out[j] += arow[k] * brow[j];
    }
    if (ring.is_field())
        for (std::size_t j = 0; j < b.cols(); ++j) out[j] = ring.reduce(out[j]);
}

}  // namespace

Matrix multiply_serial(const Matrix& a, const Matrix& b) {
    check_product_shape(a, b);
    Matrix c(a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
    return c;
}

Matrix multiply_parallel(const Matrix& a, const Matrix& b) {
    check_product_shape(a, b);
    Matrix c(a.ring(), a.rows(), b.cols());
    const auto n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) multiply_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

}  // namespace kernels

}  // namespace cohfun
