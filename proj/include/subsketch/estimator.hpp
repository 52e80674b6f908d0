#pragma once

#include "subsketch/experiment.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace subsketch {

// Closed-form post-sketch predictions. All quantities are squared; take
// square roots only for presentation.
struct RipEstimate {
    double oaff_sq = 0.0;
    double od_sq = 0.0;
    double slack = 0.0;  // eps * (d1 - aff_x^2), the band radius in affinity units
};

// oaff^2 = aff^2 + (d2/n) * (d1 - aff^2)
double projected_affinity_estimate(double aff_sq, std::size_t d1, std::size_t d2, std::size_t n);

// od^2 = d^2 - (d2/n) * (d^2 - (d2 - d1)/2)
double projected_distance_estimate(double d_sq, std::size_t d1, std::size_t d2, std::size_t n);

RipEstimate rip_estimate(double aff_sq, std::size_t d1, std::size_t d2, std::size_t n,
                         double epsilon);

// ((1 - eps) * d_sq, (1 + eps) * d_sq)
std::pair<double, double> rip_band(double d_sq, double epsilon);

// Empirical stand-ins for the decay constants, fitted per epsilon from a
// Monte Carlo report. reliable is false unless the regression had at least
// two usable points, positive decay rate, and r2 >= 0.9.
struct CalibrationResult {
    double c1_hat = 0.0;     // dimension threshold: n >= c1_hat * max(d, ln L)
    double c2_hat = 0.0;     // decay rate per unit n
    double epsilon = 0.0;
    double fit_r2 = 0.0;
    std::string grid;        // human-readable echo of the sweep used
    bool reliable = false;
};

CalibrationResult calibrate_constants(const ConcentrationReport& report);

enum class PlanBinding { dimension, union_bound };

struct PlanResult {
    std::size_t n = 0;
    PlanBinding binding = PlanBinding::dimension;
};

// Smallest n with n >= c1_hat * max(d, ln L) and
// exp(-c2_hat * n) * L(L-1)/2 <= target_failure. Refuses unreliable or
// epsilon-mismatched calibrations.
PlanResult plan_sketch_dimension(std::size_t d, std::size_t l_count, double epsilon,
                                 double target_failure, const CalibrationResult& cal);

}  // namespace subsketch
