#pragma once

#include <cstddef>
#include <vector>

namespace subsketch {

// Dense row-major matrix of 64-bit floats; the universal numerical carrier.
// Entries are validated finite at construction. Values are immutable in
// spirit: every operation returns a fresh matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);  // zero-filled
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
    double* row_ptr(std::size_t i) { return data_.data() + i * cols_; }

    const std::vector<double>& data() const noexcept { return data_; }
    std::vector<double>& data() noexcept { return data_; }

    std::vector<double> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<double>& v);

    // Columns [first, first + count) as a new matrix.
    Matrix columns(std::size_t first, std::size_t count) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double factor);
Matrix hcat(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);
double column_norm(const Matrix& a, std::size_t j);

// Modified Gram-Schmidt with one full reorthogonalization pass. The first
// output column is the first input column normalized. A column whose
// residual drops below 1e-12 of its original norm is rejected as rank
// deficient, reporting the offending column index.
Matrix gram_schmidt(const Matrix& a);

// Each output column is the input column divided by its Euclidean norm.
Matrix normalize_columns(const Matrix& a);

// Appends `extra` columns to an orthonormal n x k matrix, keeping the whole
// result orthonormal. Deterministic: candidates are standard basis vectors.
Matrix complete_orthonormal(const Matrix& q, std::size_t extra);

}  // namespace subsketch
