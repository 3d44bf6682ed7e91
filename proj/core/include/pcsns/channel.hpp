#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pcsns/matrix.hpp"
#include "pcsns/params.hpp"

namespace pcsns {

/// Point scatterer. Positive velocity produces a positive Doppler shift.
struct Target {
    double range = 0.0;     // m
    double velocity = 0.0;  // m/s
    Complex amplitude{1.0, 0.0};

    double delay(const RadarMetrics& m) const { return 2.0 * range / m.speed_of_light; }
    double doppler(const RadarMetrics& m) const { return 2.0 * velocity / m.wavelength; }

    bool operator==(const Target&) const = default;
};

struct TargetScenario {
    std::vector<Target> targets;
    double noise_power = 0.0;  // variance per complex frequency-domain entry
    std::uint64_t noise_seed = 1;

    void validate() const;
    bool operator==(const TargetScenario&) const = default;
};

/// Full-rate (or decimated) baseband samples, symbol by symbol: [CP | body].
struct SampleStream {
    std::vector<Complex> samples;
    double sample_rate = 0.0;  // Hz
    std::size_t cp_length = 0;
    std::size_t body_length = 0;
    std::size_t n_symbols = 0;

    std::size_t symbol_length() const { return cp_length + body_length; }
};

/// X = R A V^T: X(m, n) = sum_k alpha_k e^{-j 2 pi m df tau_k} e^{+j 2 pi n fD_k Ts}, m, n 1-based.
SymbolMatrix target_matrix(const TargetScenario& scenario, const RadarParams& params, const RadarMetrics& metrics);

/// Circularly-symmetric complex white Gaussian noise, E|w|^2 = variance, drawn column-major from Rng(seed).
SymbolMatrix noise_matrix(std::size_t rows, std::size_t cols, double variance, std::uint64_t seed);

/// S = C (.) X + W.
SymbolMatrix apply_channel(const SymbolMatrix& tx, const TargetScenario& scenario, const RadarParams& params,
                           const RadarMetrics& metrics);
SymbolMatrix apply_channel(const SymbolMatrix& tx, const TargetScenario& scenario, const RadarParams& params);

/// round(T_CP * B); throws when T_CP * B is not an integer (within 1e-6).
std::size_t cp_samples(const RadarParams& params);

/**
 * OFDM modulation at the full rate B = N_c df. Symbol body sample t is
 * sum_m tx(m, n) e^{j 2 pi m t / N_c} (m = 1..N_c, unnormalized), and the
 * cyclic prefix repeats the last cp_samples() body samples.
 */
SampleStream synth_time_domain(const SymbolMatrix& tx, const RadarParams& params);

/**
 * Time-domain counterpart of apply_channel for integer sample delays.
 *
 * Each target delays the stream by tau * B samples (must be an integer no
 * longer than the CP) and rotates every sample by the per-symbol Doppler
 * phase of the symbol it came from. Noise, when requested, is white with
 * per-sample variance noise_power * N_c, which demodulates to noise_power
 * per frequency-domain entry.
 */
SampleStream apply_channel_time(const SampleStream& tx, const TargetScenario& scenario, const RadarParams& params,
                                const RadarMetrics& metrics);

}  // namespace pcsns
