#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "pcsns/channel.hpp"
#include "pcsns/matrix.hpp"
#include "pcsns/params.hpp"
#include "pcsns/receiver.hpp"

namespace pcsns {

enum class Window { none, hann };

Window parse_window(std::string_view name);
std::string_view to_string(Window w);

/// Symmetric Hann taper without zero end points: w[i] = 0.5 (1 - cos(2 pi (i + 1) / (n + 1))).
std::vector<double> hann_window(std::size_t n);

/**
 * Range-Doppler periodogram. Rows are range bins (0 .. N_c-1, bin i at
 * i * range_resolution). Columns are Doppler bins after an FFT shift:
 * column c is velocity (c - zero_velocity_col) * velocity_resolution,
 * covering [-v_max, +v_max).
 */
struct RangeDopplerMap {
    Grid<double> power;
    double range_bin_m = 0.0;
    double velocity_bin_mps = 0.0;
    std::size_t zero_velocity_col = 0;
    double max_power = 0.0;

    std::size_t range_bins() const { return power.rows(); }
    std::size_t velocity_bins() const { return power.cols(); }
    double range_at(std::size_t row) const { return static_cast<double>(row) * range_bin_m; }
    double velocity_at(std::size_t col) const {
        return (static_cast<double>(col) - static_cast<double>(zero_velocity_col)) * velocity_bin_mps;
    }
    /// Nearest bin, wrapped onto the periodic axis.
    std::size_t range_bin_of(double range) const;
    std::size_t velocity_col_of(double velocity) const;
    /// 10 log10(power / max_power), floored at -300 dB.
    double db(std::size_t row, std::size_t col) const;
};

/**
 * Inverse DFT across subcarriers, forward DFT across symbols (both
 * unnormalized), squared magnitude. A unit target on an exact bin peaks at
 * (N_c N_s)^2 with Window::none.
 */
RangeDopplerMap range_doppler_map(const SymbolMatrix& d, const RadarParams& params, const RadarMetrics& metrics,
                                  Window window = Window::none);
RangeDopplerMap range_doppler_map(const UnfoldedFrame& d, const RadarParams& params, const RadarMetrics& metrics,
                                  Window window = Window::none);

struct AmbiguityPoint {
    double range = 0.0;
    double velocity = 0.0;
    std::size_t p = 0;  // range replica offset, 0 = true position
    std::size_t q = 0;  // Doppler replica offset
};

/// Wraps a velocity onto [-v_max, +v_max).
double wrap_velocity(double velocity, double v_max);

/**
 * Peak positions a phase-coded frame produces for one target: ranges
 * (r + p r_max / L_c) mod r_max and velocities wrap(v + q 2 v_max / L_s)
 * for p < L_c, q < L_s, p outer. Entry 0 is the target itself.
 */
std::vector<AmbiguityPoint> predict_ambiguities(const Target& target, const CodeConfig& code,
                                                const RadarMetrics& metrics);

struct Peak {
    std::size_t range_bin = 0;
    std::size_t velocity_bin = 0;  // column index in the shifted map
    double range_m = 0.0;
    double velocity_mps = 0.0;
    double power_db = 0.0;  // relative to the map maximum
    double snr_db = 0.0;    // power_db - noise_floor_db
    double pslr_db = 0.0;   // against the strongest bin on the peak's range and Doppler cuts outside all guard boxes
};

struct PeakReport {
    std::vector<Peak> peaks;  // descending power
    double noise_floor_db = 0.0;
    double noise_floor_linear_db = 0.0;
    double detection_threshold_db = 0.0;
    std::size_t guard = 0;
    std::size_t noise_bins = 0;
};

inline constexpr double kDefaultThresholdDb = -15.0;
inline constexpr std::size_t kDefaultGuardBins = 3;
/// 10 gamma / ln 10: how far the mean of 10 log10 of exponential power sits below 10 log10 of its mean.
inline constexpr double kLogMeanBiasDb = 2.5067956895812824;

/**
 * Local maxima at or above threshold_db (relative to the map maximum), with
 * non-maximum suppression over +/- guard bins on both periodic axes.
 *
 * Noise floor: bins within +/- guard of a detected peak are excluded; over the
 * rest, noise_floor_db is the mean of the per-bin dB values plus
 * kLogMeanBiasDb, which estimates 10 log10 of the mean noise power without
 * letting a few structured sidelobe bins dominate. noise_floor_linear_db is
 * 10 log10 of the plain mean. Both are NaN when no bins remain.
 */
PeakReport detect_peaks(const RangeDopplerMap& map, double threshold_db = kDefaultThresholdDb,
                        std::size_t guard = kDefaultGuardBins);

struct NoiseFloor {
    double log_mean_db = 0.0;
    double linear_mean_db = 0.0;
    std::size_t bins = 0;
};

/// Noise floor over bins outside the +/- guard boxes around the given (range_bin, velocity_bin) centres.
NoiseFloor estimate_noise_floor(const RangeDopplerMap& map, const std::vector<Peak>& exclude, std::size_t guard);

/// noise_floor_db(a) - noise_floor_db(b).
double compare_noise_floors(const PeakReport& a, const PeakReport& b);

}  // namespace pcsns
