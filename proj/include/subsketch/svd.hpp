#pragma once

#include "subsketch/matrix.hpp"

#include <vector>

namespace subsketch {

// Thin SVD: A (m x n) = left * diag(values) * right^T with k = min(m, n)
// orthonormal columns on each side and values sorted non-increasing.
struct SvdResult {
    Matrix left_vectors;
    std::vector<double> singular_values;
    Matrix right_vectors;
};

// One-sided Jacobi SVD for small matrices (min side <= 64). Converges when
// every column pair has |<w_p, w_q>| <= 1e-14 * ||w_p|| * ||w_q||; gives up
// after 60 sweeps with a numerical-failure error carrying the residual.
SvdResult svd_small(const Matrix& a);

struct SingularExtremes {
    double min = 0.0;
    double max = 0.0;
};

// Smallest and largest singular values. Delegates to svd_small when the
// short side is at most 64; otherwise power iteration (and Cholesky-based
// inverse iteration) on the Gram matrix with tolerance 1e-10.
SingularExtremes extreme_singular_values(const Matrix& a);

}  // namespace subsketch
