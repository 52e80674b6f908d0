#pragma once

#include "subsketch/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace subsketch {

// A linear subspace of R^N held as an N x d orthonormal basis.
class Subspace {
public:
    // The basis must already have orthonormal columns within 1e-10
    // (Frobenius); use make_subspace to orthonormalize raw input.
    explicit Subspace(Matrix basis);

    std::size_t ambient_dim() const noexcept { return basis_.rows(); }
    std::size_t dim() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }

private:
    Matrix basis_;
};

// Exact pairwise geometry: principal angles, affinity, squared distance.
// Always normalized so d1 <= d2.
struct PairGeometry {
    std::size_t d1 = 0;
    std::size_t d2 = 0;
    std::vector<double> cosines;  // non-increasing, clamped to [0, 1]
    std::vector<double> angles;   // acos of cosines
    double affinity_sq = 0.0;     // sum of squared cosines
    double distance_sq = 0.0;     // (d1 + d2)/2 - affinity_sq
};

// Bases rotated so the cross-Gram u2^T u1 is diagonal (cosines on the
// diagonal, zero block below). u0, when present, holds the complement
// directions: u1 = u2 * diag(lambda) + u0 * diag(sqrt(1 - lambda^2)).
struct PrincipalBases {
    Matrix u1;
    Matrix u2;
    std::vector<double> lambda;
    std::optional<Matrix> u0;
};

Subspace make_subspace(const Matrix& raw_basis);

PairGeometry principal_angles(const Subspace& x1, const Subspace& x2);

// (1/sqrt(2)) * ||P1 - P2||_F from the explicit N x N projectors. Serves as
// the independent oracle for PairGeometry::distance_sq.
double pf_distance_direct(const Subspace& x1, const Subspace& x2);

double affinity_to_distance_sq(double affinity_sq, std::size_t d1, std::size_t d2);

// require_complement: fail with degenerate-geometry instead of returning a
// result without u0 (a shared direction makes the complement undefined).
PrincipalBases principal_bases(const Subspace& x1, const Subspace& x2,
                               bool require_complement = false);

struct GeneratedPair {
    Subspace x1;
    Subspace x2;
    PrincipalBases bases;
};

// Draws a Haar-random (d1 + d2)-frame and assembles a pair whose principal
// cosines are exactly the requested ones.
GeneratedPair generate_pair_with_angles(std::size_t ambient, const std::vector<double>& cosines,
                                        std::size_t d2, std::uint64_t seed);

// Orthonormalized Gaussian draw: Haar-distributed on the Grassmannian.
Subspace generate_random_subspace(std::size_t ambient, std::size_t dim, std::uint64_t seed);

}  // namespace subsketch
