#include "subsketch/svd.hpp"

#include "subsketch/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace subsketch {

namespace {

constexpr double kJacobiTol = 1e-14;
constexpr int kJacobiMaxSweeps = 60;

// One-sided Jacobi on the columns of w (m x n, m >= n), accumulating the
// right rotations into v. On exit the columns of w are orthogonal and their
// norms are the singular values.
void jacobi_orthogonalize(Matrix& w, Matrix& v) {
    const std::size_t m = w.rows();
    const std::size_t n = w.cols();
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        double worst = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    const double wp = w(i, p), wq = w(i, q);
                    app += wp * wp;
                    aqq += wq * wq;
                    apq += wp * wq;
                }
                const double denom = std::sqrt(app * aqq);
                if (denom == 0.0) continue;
                const double rel = std::abs(apq) / denom;
                worst = std::max(worst, rel);
                if (rel <= kJacobiTol) continue;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double wp = w(i, p), wq = w(i, q);
                    w(i, p) = cs * wp - sn * wq;
                    w(i, q) = sn * wp + cs * wq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vp = v(i, p), vq = v(i, q);
                    v(i, p) = cs * vp - sn * vq;
                    v(i, q) = sn * vp + cs * vq;
                }
            }
        }
        if (worst <= kJacobiTol) return;
    }
    // Measure the residual once more for the error message.
    double residual = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            double app = 0.0, aqq = 0.0, apq = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                app += w(i, p) * w(i, p);
                aqq += w(i, q) * w(i, q);
                apq += w(i, p) * w(i, q);
            }
            if (app * aqq > 0.0) residual = std::max(residual, std::abs(apq) / std::sqrt(app * aqq));
        }
    }
    throw error(errc::numerical_failure,
                "jacobi svd did not converge in 60 sweeps (residual " +
                    std::to_string(residual) + ")");
}

SvdResult svd_tall(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Matrix w = a;
    Matrix v = Matrix::identity(n);
    jacobi_orthogonalize(w, v);

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) norms[j] = column_norm(w, j);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    Matrix u(m, n);
    Matrix vs(n, n);
    std::vector<double> s(n);
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        s[j] = std::max(norms[src], 0.0);
        for (std::size_t i = 0; i < n; ++i) vs(i, j) = v(i, src);
        if (norms[src] > 0.0) {
            const double inv = 1.0 / norms[src];
            for (std::size_t i = 0; i < m; ++i) u(i, j) = w(i, src) * inv;
            nonzero = j + 1;
        }
    }
    // Exactly-zero columns (rank-deficient input) get arbitrary orthonormal
    // left vectors so the orthonormality contract still holds. Rotations
    // preserve the Frobenius norm, so nonzero >= 1 here (the all-zero input
    // is handled before jacobi runs).
    if (nonzero < n) {
        u = complete_orthonormal(u.columns(0, nonzero), n - nonzero);
    }
    return SvdResult{std::move(u), std::move(s), std::move(vs)};
}

}  // namespace

SvdResult svd_small(const Matrix& a) {
    if (std::min(a.rows(), a.cols()) > 64) {
        throw error(errc::invalid_argument, "svd_small is limited to min(rows, cols) <= 64");
    }
    if (a.rows() >= a.cols()) {
        // All-zero input: jacobi would leave zero columns everywhere, and the
        // completion path cannot seed itself from an empty prefix. Handle it
        // directly (happens for exactly orthogonal subspaces' cross-Gram).
        if (frobenius_norm(a) == 0.0) {
            Matrix u(a.rows(), a.cols());
            for (std::size_t j = 0; j < a.cols(); ++j) u(j, j) = 1.0;
            return SvdResult{std::move(u), std::vector<double>(a.cols(), 0.0),
                             Matrix::identity(a.cols())};
        }
        return svd_tall(a);
    }
    SvdResult t = svd_small(transpose(a));
    return SvdResult{std::move(t.right_vectors), std::move(t.singular_values),
                     std::move(t.left_vectors)};
}

namespace {

constexpr double kPowerTol = 1e-10;
constexpr int kPowerMaxIter = 20000;

Matrix gram(const Matrix& a, bool use_columns) {
    // use_columns: G = A^T A, else G = A A^T (whichever is smaller).
    if (use_columns) {
        const std::size_t n = a.cols();
        Matrix g(n, n);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const double* row = a.row_ptr(i);
            for (std::size_t p = 0; p < n; ++p) {
                const double rp = row[p];
                for (std::size_t q = p; q < n; ++q) g(p, q) += rp * row[q];
            }
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < p; ++q) g(p, q) = g(q, p);
        }
        return g;
    }
    return gram(transpose(a), true);
}

double power_iteration(const Matrix& g) {
    const std::size_t n = g.rows();
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 1e-3 * static_cast<double>(i % 7);
    double lambda = 0.0;
    for (int it = 0; it < kPowerMaxIter; ++it) {
        std::vector<double> w(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double* gi = g.row_ptr(i);
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += gi[j] * v[j];
            w[i] = s;
        }
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        const double next = norm;  // Rayleigh quotient of the normalized iterate
        if (std::abs(next - lambda) <= kPowerTol * std::max(1.0, next)) return next;
        lambda = next;
    }
    throw error(errc::numerical_failure, "power iteration did not converge");
}

// Plain Cholesky; returns false on a non-positive pivot (singular Gram).
bool cholesky(Matrix& g) {
    const std::size_t n = g.rows();
    for (std::size_t j = 0; j < n; ++j) {
        double d = g(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= g(j, k) * g(j, k);
        if (d <= 0.0) return false;
        g(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= g(i, k) * g(j, k);
            g(i, j) = s / g(j, j);
        }
    }
    return true;
}

void cholesky_solve(const Matrix& l, std::vector<double>& x) {
    const std::size_t n = l.rows();
    for (std::size_t i = 0; i < n; ++i) {
        double s = x[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x[k];
        x[i] = s / l(i, i);
    }
    for (std::size_t ri = n; ri-- > 0;) {
        double s = x[ri];
        for (std::size_t k = ri + 1; k < n; ++k) s -= l(k, ri) * x[k];
        x[ri] = s / l(ri, ri);
    }
}

double inverse_power_iteration(const Matrix& g) {
    Matrix l = g;
    if (!cholesky(l)) return 0.0;  // numerically singular: smallest value is 0
    const std::size_t n = g.rows();
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 1e-3 * static_cast<double>(i % 5);
    double mu = 0.0;
    for (int it = 0; it < kPowerMaxIter; ++it) {
        std::vector<double> w = v;
        cholesky_solve(l, w);
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        // Rayleigh quotient of v under g is the current eigenvalue estimate.
        double rq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double* gi = g.row_ptr(i);
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += gi[j] * v[j];
            rq += v[i] * s;
        }
        if (std::abs(rq - mu) <= kPowerTol * std::max(1.0, rq) && it > 0) return rq;
        mu = rq;
    }
    throw error(errc::numerical_failure, "inverse power iteration did not converge");
}

}  // namespace

SingularExtremes extreme_singular_values(const Matrix& a) {
    const std::size_t short_side = std::min(a.rows(), a.cols());
    if (short_side <= 64) {
        SvdResult svd = svd_small(a);
        return SingularExtremes{svd.singular_values.back(), svd.singular_values.front()};
    }
    const Matrix g = gram(a, a.cols() <= a.rows());
    const double lmax = power_iteration(g);
    const double lmin = inverse_power_iteration(g);
    return SingularExtremes{std::sqrt(std::max(lmin, 0.0)), std::sqrt(std::max(lmax, 0.0))};
}

}  // namespace subsketch
