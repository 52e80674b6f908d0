#include "subsketch/matrix.hpp"

#include "subsketch/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace subsketch {

namespace {

void check_finite(const std::vector<double>& entries) {
    for (double v : entries) {
        if (!std::isfinite(v)) {
            throw error(errc::invalid_argument, "matrix entries must be finite");
        }
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0) {
        throw error(errc::invalid_argument, "matrix dimensions must be positive");
    }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw error(errc::invalid_argument, "matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw error(errc::invalid_argument,
                    "entry count " + std::to_string(data_.size()) + " does not match " +
                        std::to_string(rows) + "x" + std::to_string(cols));
    }
    check_finite(data_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> Matrix::column(std::size_t j) const {
    std::vector<double> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = data_[i * cols_ + j];
    return v;
}

void Matrix::set_column(std::size_t j, const std::vector<double>& v) {
    for (std::size_t i = 0; i < rows_; ++i) data_[i * cols_ + j] = v[i];
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    Matrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw error(errc::invalid_argument,
                    "matmul dimension mismatch: " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
    }
    Matrix c(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* ci = c.row_ptr(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            const double* bk = b.row_ptr(k);
            for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    }
    return t;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw error(errc::invalid_argument, "add dimension mismatch");
    }
    Matrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
    return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw error(errc::invalid_argument, "subtract dimension mismatch");
    }
    Matrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
    return c;
}

Matrix scale(const Matrix& a, double factor) {
    Matrix c = a;
    for (double& v : c.data()) v *= factor;
    return c;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) {
        throw error(errc::invalid_argument, "hcat row mismatch");
    }
    Matrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

double column_norm(const Matrix& a, std::size_t j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

namespace {

double column_dot(const Matrix& m, std::size_t p, std::size_t q) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, p) * m(i, q);
    return s;
}

}  // namespace

Matrix gram_schmidt(const Matrix& a) {
    if (a.cols() > a.rows()) {
        throw error(errc::invalid_argument, "gram_schmidt needs cols <= rows");
    }
    Matrix q = a;
    for (std::size_t k = 0; k < q.cols(); ++k) {
        const double original = column_norm(a, k);
        // Two elimination passes: modified Gram-Schmidt plus one full
        // reorthogonalization, which keeps ||Q^T Q - I|| near roundoff.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                const double r = column_dot(q, j, k);
                for (std::size_t i = 0; i < q.rows(); ++i) q(i, k) -= r * q(i, j);
            }
        }
        const double residual = column_norm(q, k);
        if (!(residual > 1e-12 * original) || original == 0.0) {
            throw error(errc::degenerate_input,
                        "rank deficiency at column " + std::to_string(k) +
                            " (residual " + std::to_string(residual) + ")");
        }
        const double inv = 1.0 / residual;
        for (std::size_t i = 0; i < q.rows(); ++i) q(i, k) *= inv;
    }
    return q;
}

Matrix normalize_columns(const Matrix& a) {
    Matrix out = a;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const double norm = column_norm(a, j);
        if (!(norm > 1e-300)) {
            throw error(errc::degenerate_input,
                        "cannot normalize zero column " + std::to_string(j));
        }
        const double inv = 1.0 / norm;
        for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) *= inv;
    }
    return out;
}

Matrix complete_orthonormal(const Matrix& q, std::size_t extra) {
    const std::size_t n = q.rows();
    const std::size_t k = q.cols();
    if (k + extra > n) {
        throw error(errc::invalid_argument, "not enough ambient dimensions to complete basis");
    }
    Matrix out(n, k + extra);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) out(i, j) = q(i, j);
    }
    std::size_t placed = k;
    for (std::size_t cand = 0; cand < n && placed < k + extra; ++cand) {
        std::vector<double> v(n, 0.0);
        v[cand] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < placed; ++j) {
                double r = 0.0;
                for (std::size_t i = 0; i < n; ++i) r += out(i, j) * v[i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= r * out(i, j);
            }
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-3) continue;  // candidate nearly inside the span, try the next one
        for (std::size_t i = 0; i < n; ++i) out(i, placed) = v[i] / norm;
        ++placed;
    }
    if (placed < k + extra) {
        throw error(errc::numerical_failure, "orthonormal completion ran out of candidates");
    }
    return out;
}

}  // namespace subsketch
