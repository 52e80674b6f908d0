#include "subsketch/estimator.hpp"

#include "subsketch/conclab.hpp"
#include "subsketch/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace subsketch {

double projected_affinity_estimate(double aff_sq, std::size_t d1, std::size_t d2,
                                   std::size_t n) {
    if (d1 > d2 || d2 >= n) {
        throw error(errc::invalid_argument, "need d1 <= d2 < n");
    }
    if (aff_sq < -1e-9 || aff_sq > static_cast<double>(d1) + 1e-9) {
        throw error(errc::invalid_argument, "aff_sq outside [0, d1]");
    }
    const double a = std::clamp(aff_sq, 0.0, static_cast<double>(d1));
    return a + static_cast<double>(d2) / static_cast<double>(n) * (static_cast<double>(d1) - a);
}

double projected_distance_estimate(double d_sq, std::size_t d1, std::size_t d2, std::size_t n) {
    if (d1 > d2 || d2 >= n) {
        throw error(errc::invalid_argument, "need d1 <= d2 < n");
    }
    const double lo = 0.5 * static_cast<double>(d2 - d1);
    const double hi = 0.5 * static_cast<double>(d2 + d1);
    if (d_sq < lo - 1e-9 || d_sq > hi + 1e-9) {
        throw error(errc::invalid_argument, "d_sq outside [(d2-d1)/2, (d1+d2)/2]");
    }
    const double d = std::clamp(d_sq, lo, hi);
    return d - static_cast<double>(d2) / static_cast<double>(n) * (d - lo);
}

RipEstimate rip_estimate(double aff_sq, std::size_t d1, std::size_t d2, std::size_t n,
                         double epsilon) {
    RipEstimate est;
    est.oaff_sq = projected_affinity_estimate(aff_sq, d1, d2, n);
    est.od_sq = affinity_to_distance_sq(est.oaff_sq, d1, d2);
    est.slack = epsilon * (static_cast<double>(d1) - std::clamp(aff_sq, 0.0, double(d1)));
    return est;
}

std::pair<double, double> rip_band(double d_sq, double epsilon) {
    if (d_sq < 0.0) {
        throw error(errc::invalid_argument, "d_sq must be non-negative");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw error(errc::invalid_argument, "epsilon must lie in (0, 1)");
    }
    return {(1.0 - epsilon) * d_sq, (1.0 + epsilon) * d_sq};
}

CalibrationResult calibrate_constants(const ConcentrationReport& report) {
    CalibrationResult cal;
    cal.epsilon = report.config.epsilon;

    std::ostringstream grid;
    grid << "lemma=" << to_string(report.config.lemma) << " d=" << report.config.d2 << " n=";
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        grid << (i ? "," : "") << report.cells[i].n;
    }
    grid << " trials=" << report.config.trials;
    cal.grid = grid.str();

    DecayFit fit;
    try {
        fit = fit_decay(report);
    } catch (const error&) {
        cal.reliable = false;  // fewer than 2 usable points: no constants
        return cal;
    }
    cal.c2_hat = -fit.slope;
    cal.fit_r2 = fit.r2;

    // Dimension threshold: the smallest n/d in the grid whose observed rate
    // already sits on (or under) the fitted decay curve, rounded up.
    const double d = static_cast<double>(std::max<std::size_t>(report.config.d2, 1));
    double best_ratio = std::numeric_limits<double>::infinity();
    for (const ReportCell& cell : report.cells) {
        const double predicted = std::exp(fit.intercept + fit.slope * static_cast<double>(cell.n));
        if (cell.p_hat <= predicted * (1.0 + 1e-12)) {
            best_ratio = std::min(best_ratio, static_cast<double>(cell.n) / d);
        }
    }
    if (!std::isfinite(best_ratio)) {
        best_ratio = static_cast<double>(report.cells.front().n) / d;
    }
    cal.c1_hat = std::ceil(best_ratio);
    cal.reliable = cal.c2_hat > 0.0 && cal.fit_r2 >= 0.9;
    return cal;
}

PlanResult plan_sketch_dimension(std::size_t d, std::size_t l_count, double epsilon,
                                 double target_failure, const CalibrationResult& cal) {
    if (!cal.reliable) {
        throw error(errc::calibration_mismatch, "calibration is unreliable; re-run with more trials");
    }
    if (std::abs(cal.epsilon - epsilon) > 1e-12) {
        throw error(errc::calibration_mismatch,
                    "calibration was fitted for epsilon " + std::to_string(cal.epsilon));
    }
    if (d == 0 || l_count == 0 || !(target_failure > 0.0)) {
        throw error(errc::invalid_argument, "need d >= 1, L >= 1, target > 0");
    }
    const double dim_term =
        cal.c1_hat * std::max(static_cast<double>(d), std::log(static_cast<double>(l_count)));
    const std::size_t n_dim = static_cast<std::size_t>(std::ceil(dim_term));

    // Union bound over L(L-1)/2 pairs: exp(-c2 n) * pairs <= target.
    const double pairs = 0.5 * static_cast<double>(l_count) * static_cast<double>(l_count - 1);
    std::size_t n_union = 0;
    if (pairs > 0.0 && pairs > target_failure) {
        n_union = static_cast<std::size_t>(std::ceil(std::log(pairs / target_failure) / cal.c2_hat));
    }

    PlanResult out;
    out.n = std::max<std::size_t>({n_dim, n_union, 1});
    out.binding = n_union > n_dim ? PlanBinding::union_bound : PlanBinding::dimension;
    return out;
}

}  // namespace subsketch
