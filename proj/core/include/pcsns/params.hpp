#pragma once

#include <cstddef>

namespace pcsns {

inline constexpr double kSpeedOfLight = 299'792'458.0;

/// OFDM numerology. The useful symbol duration is derived as 1/subcarrier_spacing.
struct RadarParams {
    std::size_t n_subcarriers = 2048;
    std::size_t n_symbols = 256;
    double subcarrier_spacing = 1e9 / 2048.0;  // Hz
    double carrier_freq = 77e9;                // Hz
    double cp_duration = 0.512e-6;             // s

    double symbol_duration() const { return 1.0 / subcarrier_spacing; }
    double total_symbol_duration() const { return symbol_duration() + cp_duration; }
    double bandwidth() const { return static_cast<double>(n_subcarriers) * subcarrier_spacing; }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    bool operator==(const RadarParams&) const = default;
};

struct RadarMetrics {
    double bandwidth = 0.0;            // Hz
    double range_resolution = 0.0;     // m
    double r_max = 0.0;                // m
    double velocity_resolution = 0.0;  // m/s
    double v_max = 0.0;                // m/s, the Doppler axis spans [-v_max, +v_max)
    double wavelength = 0.0;           // m
    double speed_of_light = kSpeedOfLight;
    std::size_t n_subcarriers = 0;
    std::size_t n_symbols = 0;
};

/// Phase-code factorization L = L_c * L_s (frequency-domain codes times time-domain codes).
struct CodeConfig {
    std::size_t l_c = 1;
    std::size_t l_s = 1;

    std::size_t l() const { return l_c * l_s; }
    std::size_t sub_band_rows(const RadarParams& params) const { return params.n_subcarriers / l(); }

    /// Requires L_c, L_s >= 1, L | N_c and L_s | N_s.
    void validate(const RadarParams& params) const;

    bool operator==(const CodeConfig&) const = default;
};

struct UnambiguousLimits {
    double r_u = 0.0;  // m
    double v_u = 0.0;  // m/s, reported as +/- v_u
};

RadarMetrics derive_metrics(const RadarParams& params, double speed_of_light = kSpeedOfLight);

UnambiguousLimits unambiguous_limits(const RadarMetrics& metrics, const CodeConfig& code);

/// Simulation numerology used throughout the reference study (2048 x 256, 1 GHz, 77 GHz).
RadarParams table1_params();

/// Measurement numerology of the L-sweep (2048 x 10, 1 GHz, 60.98 GHz).
RadarParams lsweep_params();

}  // namespace pcsns
