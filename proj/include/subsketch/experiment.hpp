#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subsketch {

// Which concentration statement a Monte Carlo run checks. Each id fixes the
// trial construction and the violation event; see conclab.cpp for the exact
// event definitions.
enum class LemmaId {
    lemma4,   // line vs subspace affinity estimate
    thm2,     // general pair affinity estimate
    cor1,     // general pair distance estimate
    thm1,     // set RIP: all pairwise distance ratios in (1-eps, 1+eps)
    lemma5,   // extreme singular values of a raw Gaussian matrix (tail offset t)
    lemma6,   // squared norm of a standard Gaussian vector near 1
    cor2,     // squared norm of its projection onto a d-frame near d/n
    cor3,     // singular values of a column-normalized Gaussian matrix near 1
    lemma7,   // perpendicular line stays nearly perpendicular (raw image)
    cor4,     // same with the normalized image
    lemma8,   // column-normalized basis as affinity proxy, per column k
    lemma9,   // 1 - beta_k^2 bounded by (1 - lambda_k^2)(1 + eps)
    lemma10,  // cross inner product of complement projections is small
};

const char* to_string(LemmaId id);
std::optional<LemmaId> lemma_from_string(const std::string& name);
std::vector<std::string> lemma_names();

struct ExperimentConfig {
    std::size_t ambient = 256;          // N
    std::vector<std::size_t> n_grid;    // sketch dimensions to sweep
    std::size_t d1 = 1;
    std::size_t d2 = 4;
    std::vector<double> cosines;        // empty => Haar-random pair(s)
    std::size_t l_count = 2;            // L, set-RIP experiments only
    double epsilon = 0.1;
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    LemmaId lemma = LemmaId::thm2;
    double tail_t = 0.0;                // lemma5 only: tail offset t >= 0
};

// One sketched-pair measurement. normalized_deviation is the lemma's event
// statistic in units of its own slack, so `violated == (deviation > eps)`
// for every lemma except lemma5, where it is the raw tail excess and the
// event is excess > 0.
struct TrialRecord {
    std::size_t trial_index = 0;
    std::size_t n = 0;
    double aff_x_sq = 0.0, aff_y_sq = 0.0, oaff_sq = 0.0;
    double d_x_sq = 0.0, d_y_sq = 0.0, od_sq = 0.0;
    double normalized_deviation = 0.0;
    bool violated = false;
    bool degenerate = false;
    // d1 == 1 runs expose the complement image a0 and check the exact
    // decomposition identity; absent otherwise.
    std::optional<double> line_identity_residual;
};

// One pairwise ratio from a set-RIP trial. Pairs with zero original
// distance are excluded from the band check but still reported.
struct PairRatioRecord {
    std::size_t i = 0, j = 0;
    double d_x_sq = 0.0, d_y_sq = 0.0;
    double ratio = 0.0;
    bool excluded = false;
};

// Gram-Schmidt intermediates of sketched column k measured on a concrete
// trial, plus the residual of the exact decomposition identity relating
// them (zero in exact arithmetic).
struct ProofIntermediates {
    std::size_t k = 0;
    double alpha_k = 0.0;       // ||P_prefix(abar_1k)||
    double beta_k = 0.0;        // ||P_Y2(b_k)||
    double lambda_hat_k = 0.0;  // ||P_Y2(abar_1k)||
    double cross_inner = 0.0;   // <abar_1k complement dir, b_k complement dir>
    double identity_residual = 0.0;
};

// Empirical check of the raw-Gaussian singular value tail bounds at offset t.
struct TailProbe {
    double t = 0.0;
    std::size_t n_rows = 0, n_cols = 0;
    double exceed_max_rate = 0.0;
    double exceed_min_rate = 0.0;
};

struct ReportCell {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::size_t degenerate = 0;
    double p_hat = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
    double mean_normalized_deviation = 0.0;
};

struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::size_t points_used = 0;
};

// Per-n violation rates with Wilson 95% intervals and, when at least two
// grid points have >= 5 failures, a least-squares fit of ln p_hat vs n.
struct ConcentrationReport {
    ExperimentConfig config;
    std::vector<ReportCell> cells;
    std::optional<DecayFit> fit;
};

}  // namespace subsketch
