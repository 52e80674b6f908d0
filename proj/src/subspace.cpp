#include "subsketch/subspace.hpp"

#include "subsketch/errors.hpp"
#include "subsketch/rng.hpp"
#include "subsketch/svd.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace subsketch {

namespace {

double orthonormality_residual(const Matrix& basis) {
    const Matrix gram = matmul(transpose(basis), basis);
    return frobenius_norm(subtract(gram, Matrix::identity(basis.cols())));
}

void check_same_ambient(const Subspace& x1, const Subspace& x2) {
    if (x1.ambient_dim() != x2.ambient_dim()) {
        throw error(errc::invalid_argument,
                    "ambient dimension mismatch: " + std::to_string(x1.ambient_dim()) + " vs " +
                        std::to_string(x2.ambient_dim()));
    }
}

}  // namespace

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
    if (basis_.cols() > basis_.rows()) {
        throw error(errc::invalid_argument, "subspace dimension exceeds ambient dimension");
    }
    if (orthonormality_residual(basis_) > 1e-10) {
        throw error(errc::invalid_argument, "subspace basis is not orthonormal");
    }
}

Subspace make_subspace(const Matrix& raw_basis) {
    return Subspace(gram_schmidt(raw_basis));
}

double affinity_to_distance_sq(double affinity_sq, std::size_t d1, std::size_t d2) {
    if (d1 > d2) {
        throw error(errc::invalid_argument, "affinity_to_distance_sq needs d1 <= d2");
    }
    if (affinity_sq < -1e-9 || affinity_sq > static_cast<double>(d1) + 1e-9) {
        throw error(errc::invalid_argument, "affinity_sq outside [0, d1]");
    }
    const double clamped = std::clamp(affinity_sq, 0.0, static_cast<double>(d1));
    return 0.5 * static_cast<double>(d1 + d2) - clamped;
}

PairGeometry principal_angles(const Subspace& x1, const Subspace& x2) {
    check_same_ambient(x1, x2);
    const Subspace& lo = x1.dim() <= x2.dim() ? x1 : x2;
    const Subspace& hi = x1.dim() <= x2.dim() ? x2 : x1;

    PairGeometry geo;
    geo.d1 = lo.dim();
    geo.d2 = hi.dim();
    const Matrix cross = matmul(transpose(lo.basis()), hi.basis());  // d1 x d2
    SvdResult svd = svd_small(cross);

    geo.cosines.resize(geo.d1);
    geo.angles.resize(geo.d1);
    double aff_sq = 0.0;
    for (std::size_t k = 0; k < geo.d1; ++k) {
        const double lambda = std::clamp(svd.singular_values[k], 0.0, 1.0);
        geo.cosines[k] = lambda;
        geo.angles[k] = std::acos(lambda);
        aff_sq += lambda * lambda;
    }
    geo.affinity_sq = aff_sq;
    geo.distance_sq = affinity_to_distance_sq(aff_sq, geo.d1, geo.d2);
    return geo;
}

double pf_distance_direct(const Subspace& x1, const Subspace& x2) {
    check_same_ambient(x1, x2);
    const Matrix p1 = matmul(x1.basis(), transpose(x1.basis()));
    const Matrix p2 = matmul(x2.basis(), transpose(x2.basis()));
    return frobenius_norm(subtract(p1, p2)) / std::sqrt(2.0);
}

PrincipalBases principal_bases(const Subspace& x1, const Subspace& x2, bool require_complement) {
    check_same_ambient(x1, x2);
    if (x1.dim() > x2.dim()) {
        throw error(errc::invalid_argument, "principal_bases needs dim(x1) <= dim(x2)");
    }
    const std::size_t d1 = x1.dim();
    const std::size_t d2 = x2.dim();
    const std::size_t ambient = x1.ambient_dim();

    // cross = U2~^T U1~ = Q2 diag(lambda) Q1^T; rotating each raw basis by
    // its Q makes the cross-Gram diagonal.
    const Matrix cross = matmul(transpose(x2.basis()), x1.basis());  // d2 x d1
    SvdResult svd = svd_small(cross);

    PrincipalBases out;
    out.lambda.resize(d1);
    for (std::size_t k = 0; k < d1; ++k) {
        out.lambda[k] = std::clamp(svd.singular_values[k], 0.0, 1.0);
    }
    out.u1 = matmul(x1.basis(), svd.right_vectors);  // N x d1

    Matrix q2 = svd.left_vectors;  // d2 x d1 (thin)
    if (d2 > d1) q2 = complete_orthonormal(q2, d2 - d1);
    out.u2 = matmul(x2.basis(), q2);  // N x d2

    const bool shared_direction =
        !out.lambda.empty() && out.lambda.front() >= 1.0 - 1e-10;
    const bool fits = d1 + d2 <= ambient;
    if (!shared_direction && fits) {
        Matrix u0(ambient, d1);
        for (std::size_t k = 0; k < d1; ++k) {
            const double lambda = out.lambda[k];
            const double inv = 1.0 / std::sqrt(1.0 - lambda * lambda);
            for (std::size_t i = 0; i < ambient; ++i) {
                u0(i, k) = (out.u1(i, k) - lambda * out.u2(i, k)) * inv;
            }
        }
        out.u0 = std::move(u0);
    } else if (require_complement) {
        throw error(errc::degenerate_geometry,
                    shared_direction
                        ? "complement undefined: subspaces share a direction (cosine ~ 1)"
                        : "complement needs d1 + d2 <= ambient dimension");
    }
    return out;
}

GeneratedPair generate_pair_with_angles(std::size_t ambient, const std::vector<double>& cosines,
                                        std::size_t d2, std::uint64_t seed) {
    const std::size_t d1 = cosines.size();
    if (d1 == 0 || d1 > d2) {
        throw error(errc::invalid_argument, "need 1 <= len(cosines) <= d2");
    }
    if (d1 + d2 > ambient) {
        throw error(errc::invalid_argument, "d1 + d2 exceeds ambient dimension");
    }
    for (std::size_t k = 0; k < d1; ++k) {
        if (cosines[k] < 0.0 || cosines[k] > 1.0) {
            throw error(errc::invalid_argument, "cosines must lie in [0, 1]");
        }
        if (k > 0 && cosines[k] > cosines[k - 1]) {
            throw error(errc::invalid_argument, "cosines must be non-increasing");
        }
    }

    CounterRng rng(seed);
    Matrix raw(ambient, d1 + d2);
    for (double& v : raw.data()) v = rng.gaussian();
    const Matrix frame = gram_schmidt(raw);

    const Matrix u2 = frame.columns(0, d2);
    const Matrix u0 = frame.columns(d2, d1);
    Matrix u1(ambient, d1);
    for (std::size_t k = 0; k < d1; ++k) {
        const double lambda = cosines[k];
        const double mu = std::sqrt(1.0 - lambda * lambda);
        for (std::size_t i = 0; i < ambient; ++i) {
            u1(i, k) = lambda * u2(i, k) + mu * u0(i, k);
        }
    }

    PrincipalBases bases;
    bases.u1 = u1;
    bases.u2 = u2;
    bases.lambda = cosines;
    bases.u0 = u0;
    return GeneratedPair{Subspace(std::move(u1)), Subspace(u2), std::move(bases)};
}

Subspace generate_random_subspace(std::size_t ambient, std::size_t dim, std::uint64_t seed) {
    if (dim == 0 || dim > ambient) {
        throw error(errc::invalid_argument, "need 1 <= dim <= ambient");
    }
    CounterRng rng(seed);
    Matrix raw(ambient, dim);
    for (double& v : raw.data()) v = rng.gaussian();
    return Subspace(gram_schmidt(raw));
}

}  // namespace subsketch
