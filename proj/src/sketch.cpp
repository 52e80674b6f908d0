#include "subsketch/sketch.hpp"

#include "subsketch/errors.hpp"
#include "subsketch/rng.hpp"
#include "subsketch/svd.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace subsketch {

namespace {

Matrix draw_entries(std::size_t n, std::size_t ambient, std::uint64_t seed) {
    Matrix entries(n, ambient);
    CounterRng rng(seed);
    const double sigma = 1.0 / std::sqrt(static_cast<double>(n));
    for (double& v : entries.data()) v = sigma * rng.gaussian();
    return entries;
}

}  // namespace

SketchOperator::SketchOperator(std::size_t target_dim, std::size_t ambient, std::uint64_t seed)
    : entries_(draw_entries(target_dim, ambient, seed)), seed_(seed) {
#ifndef NDEBUG
    // Sanity check on the draw, active in test (assert-enabled) builds only:
    // sample mean within 4 standard errors, sample variance within 20%.
    if (target_dim * ambient >= 10000) {
        const SketchSampleStats stats = sketch_sample_stats(*this);
        const double n = static_cast<double>(target_dim);
        const double count = static_cast<double>(target_dim * ambient);
        const double mean_bound = 4.0 / (std::sqrt(count) * std::sqrt(n));
        if (std::abs(stats.mean) > mean_bound ||
            std::abs(stats.variance * n - 1.0) > 0.2) {
            throw error(errc::numerical_failure, "gaussian draw failed its sample-stat check");
        }
    }
#endif
}

SketchOperator gaussian_operator(std::size_t n, std::size_t ambient, std::uint64_t seed) {
    if (n == 0 || n >= ambient) {
        throw error(errc::invalid_argument, "need 0 < n < ambient");
    }
    return SketchOperator(n, ambient, seed);
}

SketchSampleStats sketch_sample_stats(const SketchOperator& op) {
    const std::vector<double>& data = op.entries().data();
    double sum = 0.0;
    for (double v : data) sum += v;
    const double mean = sum / static_cast<double>(data.size());
    double ss = 0.0;
    for (double v : data) ss += (v - mean) * (v - mean);
    return SketchSampleStats{mean, ss / static_cast<double>(data.size())};
}

Subspace apply(const SketchOperator& op, const Subspace& x) {
    if (x.ambient_dim() != op.ambient()) {
        throw error(errc::invalid_argument, "subspace ambient does not match operator");
    }
    if (x.dim() >= op.target_dim()) {
        throw error(errc::invalid_argument, "subspace dimension must be below target dimension");
    }
    const Matrix image = matmul(op.entries(), x.basis());
    if (extreme_singular_values(image).min <= 1e-10) {
        throw degenerate_sketch_error(op.seed(), "sketched basis lost rank (seed " +
                                                     std::to_string(op.seed()) + ")");
    }
    return Subspace(gram_schmidt(image));
}

SketchedPair sketch_pair(const SketchOperator& op, const PrincipalBases& bases) {
    if (bases.u1.rows() != op.ambient() || bases.u2.rows() != op.ambient()) {
        throw error(errc::invalid_argument, "bases ambient does not match operator");
    }
    if (bases.u2.cols() >= op.target_dim()) {
        throw error(errc::invalid_argument, "subspace dimension must be below target dimension");
    }
    Matrix a1 = matmul(op.entries(), bases.u1);
    Matrix a2 = matmul(op.entries(), bases.u2);
    if (extreme_singular_values(a1).min <= 1e-10 || extreme_singular_values(a2).min <= 1e-10) {
        throw degenerate_sketch_error(op.seed(), "sketched basis lost rank (seed " +
                                                     std::to_string(op.seed()) + ")");
    }
    Matrix abar1 = normalize_columns(a1);
    Matrix abar2 = normalize_columns(a2);
    Matrix v1 = gram_schmidt(abar1);
    Matrix v2 = gram_schmidt(abar2);
    Subspace y1{v1};
    Subspace y2{v2};
    return SketchedPair{std::move(a1),    std::move(a2), std::move(abar1), std::move(abar2),
                        std::move(v1),    std::move(v2), std::move(y1),    std::move(y2)};
}

}  // namespace subsketch
