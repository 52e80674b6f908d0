#pragma once

#include "subsketch/experiment.hpp"
#include "subsketch/sketch.hpp"

#include <vector>

namespace subsketch {

// Monte Carlo verification engine. Every trial is a pure function of
// (config, n, trial_index); the sweep may execute trials on any number of
// worker threads and still aggregates in (n, trial_index) order, so reports
// are byte-identical regardless of scheduling. Worker count is capped by the
// SUBSPACE_SKETCH_THREADS environment variable.

void validate(const ExperimentConfig& config);

// One sketched-pair measurement (lemma4 / thm2 / cor1 style configs).
TrialRecord run_pair_trial(const ExperimentConfig& config, std::size_t n,
                           std::size_t trial_index);

// One set-RIP trial: L Haar subspaces through a shared operator, all
// pairwise distance ratios. all_in_band covers the non-excluded pairs.
struct SetTrialResult {
    std::vector<PairRatioRecord> ratios;
    bool all_in_band = true;
    bool degenerate = false;
};

SetTrialResult run_set_trial(const ExperimentConfig& config, std::size_t n,
                             std::size_t trial_index);

// Gram-Schmidt intermediates of sketched column k (1-based, 2 <= k <= d1)
// and the residual of the exact decomposition identity they satisfy.
ProofIntermediates proof_intermediates(const SketchedPair& pair, std::size_t k);

struct RateEstimate {
    double p_hat = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
};

RateEstimate wilson_interval(std::size_t failures, std::size_t valid);

// Re-derives the violation rate of pair-style records at a given epsilon.
RateEstimate failure_rate(const std::vector<TrialRecord>& records, double epsilon);

// Ordinary least squares on (n, ln p_hat) over cells with >= 5 failures.
DecayFit fit_decay(const ConcentrationReport& report);

// All trials for one grid point, in trial order. Runs in parallel.
std::vector<TrialRecord> run_trials(const ExperimentConfig& config, std::size_t n);

// Full grid sweep with per-cell rates and an optional decay fit.
ConcentrationReport sweep(const ExperimentConfig& config);

// validate() + sweep(): rejects configs that make no sense for the lemma.
ConcentrationReport verify_lemma(const ExperimentConfig& config);

// Raw-Gaussian singular value tails at offset config.tail_t, matrix shape
// n_rows x config.d2, unit-variance entries.
TailProbe tail_probe(const ExperimentConfig& config, std::size_t n_rows);

// Effective worker count: min(SUBSPACE_SKETCH_THREADS, hardware threads).
std::size_t worker_count();

}  // namespace subsketch
