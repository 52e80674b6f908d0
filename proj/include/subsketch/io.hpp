#pragma once

#include "subsketch/estimator.hpp"
#include "subsketch/experiment.hpp"
#include "subsketch/matrix.hpp"
#include "subsketch/subspace.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace subsketch {

inline constexpr const char* tool_version = "0.1.0";

// Binary matrix container: magic "SSKM", u32 version, u64 rows, u64 cols,
// then row-major IEEE-754 doubles, all little-endian. Round-trips are
// bit-exact. Writes go through a temp file + rename.
void save_matrix(const std::filesystem::path& path, const Matrix& m);
Matrix load_matrix(const std::filesystem::path& path);

// A subspace file is its basis matrix; loading re-checks orthonormality.
void save_subspace(const std::filesystem::path& path, const Subspace& s);
Subspace load_subspace(const std::filesystem::path& path);

// Plain-text interoperable export.
std::string matrix_to_csv(const Matrix& m);

// Report CSV: header `lemma,n,trials,failures,p_hat,wilson_lo,wilson_hi`,
// one row per grid point, then `#fit slope=... intercept=... r2=...` when a
// fit is present. Formatting is fixed so reruns are byte-identical.
std::string report_to_csv(const ConcentrationReport& report);

// Self-contained SVG line chart of ln p_hat vs n (800 x 500 viewBox,
// log-scale y, fitted line dashed). No external renderer involved.
std::string report_to_svg(const ConcentrationReport& report);

void save_calibration(const std::filesystem::path& path, const CalibrationResult& cal);
CalibrationResult load_calibration(const std::filesystem::path& path);

std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);

struct ManifestEntry {
    std::string path;
    std::uint64_t bytes = 0;
    std::string fnv1a64_hex;
};

// Run provenance: resolved configuration, seed, timestamps, and the hash of
// every file the run emitted.
struct RunManifest {
    std::string command;
    std::string config_json;  // resolved flags as a JSON object
    std::uint64_t master_seed = 0;
    std::string started;
    std::string finished;
    std::vector<ManifestEntry> outputs;
};

void save_manifest(const std::filesystem::path& path, const RunManifest& manifest);

// Records path/size/hash of an already-written file into the manifest.
void manifest_add_output(RunManifest& manifest, const std::filesystem::path& path);

std::string iso8601_now();

// Write-to-temp-then-rename.
void atomic_write(const std::filesystem::path& path, const std::string& bytes);

}  // namespace subsketch
