#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "pcsns/config.hpp"
#include "pcsns/matrix.hpp"
#include "pcsns/params.hpp"
#include "pcsns/rdproc.hpp"

namespace pcsns {

/// Intermediate matrices of one simulated frame.
struct TrialFrames {
    SymbolMatrix tx;        // C
    SymbolMatrix rx;        // S = C (.) X + W
    SymbolMatrix folded;    // Z
    SymbolMatrix unfolded;  // D
};

/// Seeds of trial t: symbol_seed + t and noise_seed + t.
std::uint64_t trial_symbol_seed(const ExperimentConfig& cfg, std::size_t trial);
std::uint64_t trial_noise_seed(const ExperimentConfig& cfg, std::size_t trial);

RadarMetrics config_metrics(const ExperimentConfig& cfg);

/// Transmit frame for the configured mode: random symbols (full, sns) or the assembled phase-coded frame (pc-sns).
SymbolMatrix transmit_frame(const ExperimentConfig& cfg, std::size_t trial);

/// gen -> assemble -> channel -> fold -> unfold for one trial.
TrialFrames simulate_frames(const ExperimentConfig& cfg, std::size_t trial);

/// simulate_frames followed by the range-Doppler map.
RangeDopplerMap simulate_map(const ExperimentConfig& cfg, std::size_t trial);

struct TrialSummary {
    std::size_t trial = 0;
    std::uint64_t symbol_seed = 0;
    std::uint64_t noise_seed = 0;
    double noise_floor_db = 0.0;
    double noise_floor_linear_db = 0.0;
    std::size_t n_peaks = 0;
};

struct ExperimentReport {
    ExperimentConfig config;
    RadarMetrics metrics;
    /// Coded limits for pc-sns; r_max / v_max for full and sns.
    UnambiguousLimits limits;
    /// Predicted peak positions, one list per target.
    std::vector<std::vector<AmbiguityPoint>> predicted;
    RangeDopplerMap map;  // trial 0
    PeakReport peaks;     // trial 0
    std::vector<TrialSummary> trials;
    /// Means over trials (dB values averaged in dB).
    double noise_floor_db = 0.0;
    double noise_floor_linear_db = 0.0;
    /// Map cell the range and Doppler profiles pass through (first target, else strongest peak).
    std::size_t profile_range_bin = 0;
    std::size_t profile_velocity_bin = 0;
    std::vector<std::filesystem::path> files;
};

/**
 * Runs every trial of cfg and, when write_outputs is set, writes the files
 * selected by cfg.output into cfg.output.directory:
 *   csv:    map.csv, map.bin, range_profile.csv, doppler_profile.csv,
 *           peaks.csv, trials.csv, summary.csv
 *   report: summary.json, config.yaml
 *   plots:  range_profile.svg, doppler_profile.svg, heatmap.svg
 * Throws ConfigError for invalid configs and std::runtime_error for I/O failures.
 */
ExperimentReport run_experiment(const ExperimentConfig& cfg, bool write_outputs = true);

/// Writes the outputs of an already computed report into dir.
std::vector<std::filesystem::path> write_experiment_outputs(const ExperimentReport& report,
                                                            const std::filesystem::path& dir);

struct SweepPointResult {
    SweepPoint point;
    std::filesystem::path directory;
    ExperimentReport report;
};

struct SweepReport {
    std::vector<SweepPointResult> points;
    std::filesystem::path table;  // sweep.csv, empty when outputs are off
};

/// Sub-directory name of a sweep point, e.g. "pc-sns_L16_4x4".
std::string sweep_point_label(const SweepPoint& point);

/**
 * Runs all points of the sweep (validated up front) on up to base.workers
 * threads. Every point reuses the base seeds so modes are compared on the
 * same symbols and noise. Each point writes into its own sub-directory of
 * base.output.directory; sweep.csv there tabulates the points.
 */
SweepReport run_sweep(const ExperimentConfig& base, const SweepConfig& sweep, bool write_outputs = true);

}  // namespace pcsns
