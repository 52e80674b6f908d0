#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subsketch {

// Failure taxonomy shared across the library. The CLI maps these onto
// stable process exit codes.
enum class errc {
    invalid_argument,     // rejected input: bad dimensions, out-of-range values
    degenerate_input,     // rank-deficient or zero data where full rank is required
    numerical_failure,    // an iteration failed to converge
    degenerate_sketch,    // a sketched basis lost numerical rank
    degenerate_geometry,  // construction undefined for this geometry
    parse_error,          // unreadable or malformed file
    calibration_mismatch  // calibration does not cover the requested parameters
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Rank collapse after sketching; carries the operator seed so the trial can
// be reproduced exactly.
class degenerate_sketch_error : public error {
public:
    degenerate_sketch_error(std::uint64_t seed, const std::string& msg)
        : error(errc::degenerate_sketch, msg), seed_(seed) {}
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace subsketch
