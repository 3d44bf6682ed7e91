#include "pcsns/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pcsns/fft.hpp"
#include "pcsns/rng.hpp"

namespace pcsns {

namespace {

// e^{j 2 pi x}, reducing x modulo 1 first to keep the argument small.
Complex cycles_to_phasor(double x) {
    const double frac = x - std::floor(x);
    return std::polar(1.0, 2.0 * std::numbers::pi * frac);
}

}  // namespace

void TargetScenario::validate() const {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const Target& t = targets[i];
        const std::string where = "targets[" + std::to_string(i) + "]";
        if (!(t.range >= 0.0) || !std::isfinite(t.range)) {
            throw std::invalid_argument(where + ".range must be >= 0");
        }
        if (!std::isfinite(t.velocity)) {
            throw std::invalid_argument(where + ".velocity must be finite");
        }
        if (!(std::abs(t.amplitude) > 0.0) || !std::isfinite(std::abs(t.amplitude))) {
            throw std::invalid_argument(where + ".amplitude must be nonzero");
        }
    }
    if (!(noise_power >= 0.0) || !std::isfinite(noise_power)) {
        throw std::invalid_argument("noise_power must be >= 0");
    }
}

SymbolMatrix target_matrix(const TargetScenario& scenario, const RadarParams& params, const RadarMetrics& metrics) {
    const std::size_t nc = params.n_subcarriers;
    const std::size_t ns = params.n_symbols;
    const double ts = params.total_symbol_duration();
    SymbolMatrix x(nc, ns, Complex{});
    std::vector<Complex> range_steer(nc);
    std::vector<Complex> doppler_steer(ns);
    for (const Target& t : scenario.targets) {
        const double cycles_per_subcarrier = params.subcarrier_spacing * t.delay(metrics);
        const double cycles_per_symbol = t.doppler(metrics) * ts;
        for (std::size_t m = 0; m < nc; ++m) {
            range_steer[m] = cycles_to_phasor(-static_cast<double>(m + 1) * cycles_per_subcarrier);
        }
        for (std::size_t n = 0; n < ns; ++n) {
            doppler_steer[n] = t.amplitude * cycles_to_phasor(static_cast<double>(n + 1) * cycles_per_symbol);
        }
        for (std::size_t n = 0; n < ns; ++n) {
            auto col = x.column(n);
            for (std::size_t m = 0; m < nc; ++m) {
                col[m] += range_steer[m] * doppler_steer[n];
            }
        }
    }
    return x;
}

SymbolMatrix noise_matrix(std::size_t rows, std::size_t cols, double variance, std::uint64_t seed) {
    SymbolMatrix w(rows, cols, Complex{});
    if (variance == 0.0) {
        return w;
    }
    Rng rng(seed);
    for (Complex& v : w.data()) {
        v = rng.complex_gaussian(variance);
    }
    return w;
}

SymbolMatrix apply_channel(const SymbolMatrix& tx, const TargetScenario& scenario, const RadarParams& params,
                           const RadarMetrics& metrics) {
    scenario.validate();
    if (tx.rows() != params.n_subcarriers || tx.cols() != params.n_symbols) {
        throw std::invalid_argument("apply_channel: tx is " + std::to_string(tx.rows()) + "x" +
                                    std::to_string(tx.cols()) + ", params expect " +
                                    std::to_string(params.n_subcarriers) + "x" + std::to_string(params.n_symbols));
    }
    SymbolMatrix s = hadamard(tx, target_matrix(scenario, params, metrics));
    if (scenario.noise_power > 0.0) {
        const SymbolMatrix w = noise_matrix(s.rows(), s.cols(), scenario.noise_power, scenario.noise_seed);
        for (std::size_t i = 0; i < s.size(); ++i) {
            s.data()[i] += w.data()[i];
        }
    }
    return s;
}

SymbolMatrix apply_channel(const SymbolMatrix& tx, const TargetScenario& scenario, const RadarParams& params) {
    return apply_channel(tx, scenario, params, derive_metrics(params));
}

std::size_t cp_samples(const RadarParams& params) {
    const double exact = params.cp_duration * params.bandwidth();
    const double rounded = std::round(exact);
    if (std::abs(exact - rounded) > 1e-6) {
        throw std::invalid_argument("cp_duration * bandwidth = " + std::to_string(exact) +
                                    " is not an integral number of samples");
    }
    return static_cast<std::size_t>(rounded);
}

SampleStream synth_time_domain(const SymbolMatrix& tx, const RadarParams& params) {
    const std::size_t nc = params.n_subcarriers;
    if (tx.rows() != nc || tx.cols() != params.n_symbols) {
        throw std::invalid_argument("synth_time_domain: frame does not match params");
    }
    SampleStream out;
    out.cp_length = cp_samples(params);
    out.body_length = nc;
    out.n_symbols = params.n_symbols;
    out.sample_rate = params.bandwidth();
    out.samples.resize(out.n_symbols * out.symbol_length());

    Dft idft(nc, Dft::Direction::inverse);
    std::vector<Complex> bins(nc);
    std::vector<Complex> body(nc);
    for (std::size_t n = 0; n < params.n_symbols; ++n) {
        const auto col = tx.column(n);
        // Subcarrier m (1-based) sits on DFT bin m mod N_c.
        for (std::size_t i = 0; i < nc; ++i) {
            bins[(i + 1) % nc] = col[i];
        }
        idft.execute(bins, body);
        Complex* dst = out.samples.data() + n * out.symbol_length();
        for (std::size_t k = 0; k < out.cp_length; ++k) {
            dst[k] = body[nc - out.cp_length + k];
        }
        std::copy(body.begin(), body.end(), dst + out.cp_length);
    }
    return out;
}

SampleStream apply_channel_time(const SampleStream& tx, const TargetScenario& scenario, const RadarParams& params,
                                const RadarMetrics& metrics) {
    scenario.validate();
    SampleStream rx = tx;
    std::fill(rx.samples.begin(), rx.samples.end(), Complex{});
    const double ts = params.total_symbol_duration();
    const std::size_t sym_len = tx.symbol_length();
    for (std::size_t k = 0; k < scenario.targets.size(); ++k) {
        const Target& t = scenario.targets[k];
        const double exact = t.delay(metrics) * tx.sample_rate;
        const double rounded = std::round(exact);
        if (std::abs(exact - rounded) > 1e-6) {
            throw std::invalid_argument("targets[" + std::to_string(k) +
                                        "]: time-domain path needs an integer sample delay, got " +
                                        std::to_string(exact));
        }
        const auto d = static_cast<std::size_t>(rounded);
        if (d > tx.cp_length) {
            throw std::invalid_argument("targets[" + std::to_string(k) + "]: delay of " + std::to_string(d) +
                                        " samples exceeds the cyclic prefix (" + std::to_string(tx.cp_length) +
                                        ")");
        }
        const double cycles_per_symbol = t.doppler(metrics) * ts;
        for (std::size_t n = 0; n < tx.n_symbols; ++n) {
            const Complex gain = t.amplitude * cycles_to_phasor(static_cast<double>(n + 1) * cycles_per_symbol);
            const std::size_t begin = n * sym_len;
            for (std::size_t s = begin; s < begin + sym_len && s + d < rx.samples.size(); ++s) {
                rx.samples[s + d] += gain * tx.samples[s];
            }
        }
    }
    if (scenario.noise_power > 0.0) {
        Rng rng(scenario.noise_seed);
        const double per_sample = scenario.noise_power * static_cast<double>(params.n_subcarriers);
        for (Complex& v : rx.samples) {
            v += rng.complex_gaussian(per_sample);
        }
    }
    return rx;
}

}  // namespace pcsns
