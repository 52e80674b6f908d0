#pragma once

#include "subsketch/matrix.hpp"
#include "subsketch/subspace.hpp"

#include <cstdint>

namespace subsketch {

// Seeded n x N Gaussian compression matrix with entries i.i.d. N(0, 1/n).
// Immutable after construction and safe to share across threads.
class SketchOperator {
public:
    SketchOperator(std::size_t target_dim, std::size_t ambient, std::uint64_t seed);

    std::size_t target_dim() const noexcept { return entries_.rows(); }
    std::size_t ambient() const noexcept { return entries_.cols(); }
    std::uint64_t seed() const noexcept { return seed_; }
    const Matrix& entries() const noexcept { return entries_; }

private:
    Matrix entries_;
    std::uint64_t seed_ = 0;
};

SketchOperator gaussian_operator(std::size_t n, std::size_t ambient, std::uint64_t seed);

struct SketchSampleStats {
    double mean = 0.0;
    double variance = 0.0;
};

SketchSampleStats sketch_sample_stats(const SketchOperator& op);

// Span of phi * basis, orthonormalized. Throws degenerate_sketch_error
// (carrying the seed) if the image loses numerical rank.
Subspace apply(const SketchOperator& op, const Subspace& x);

// Images of a principal-basis pair through one operator, kept at every stage
// of the pipeline: raw, column-normalized, Gram-Schmidt orthonormalized.
// Column order is preserved so prefix subspaces stay well-defined.
struct SketchedPair {
    Matrix a1, a2;        // phi * u_i
    Matrix abar1, abar2;  // column-normalized
    Matrix v1, v2;        // orthonormalized
    Subspace y1, y2;
};

SketchedPair sketch_pair(const SketchOperator& op, const PrincipalBases& bases);

}  // namespace subsketch
