#include "pcsns/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pcsns {

void RadarParams::validate() const {
    if (n_subcarriers < 2) {
        throw std::invalid_argument("n_subcarriers must be >= 2");
    }
    if (n_symbols < 1) {
        throw std::invalid_argument("n_symbols must be >= 1");
    }
    if (!(subcarrier_spacing > 0.0) || !std::isfinite(subcarrier_spacing)) {
        throw std::invalid_argument("subcarrier_spacing must be a positive finite frequency");
    }
    if (!(carrier_freq > 0.0) || !std::isfinite(carrier_freq)) {
        throw std::invalid_argument("carrier_freq must be a positive finite frequency");
    }
    if (!(cp_duration >= 0.0) || !std::isfinite(cp_duration)) {
        throw std::invalid_argument("cp_duration must be >= 0");
    }
}

void CodeConfig::validate(const RadarParams& params) const {
    if (l_c < 1) {
        throw std::invalid_argument("l_c must be >= 1");
    }
    if (l_s < 1) {
        throw std::invalid_argument("l_s must be >= 1");
    }
    if (params.n_subcarriers % l() != 0) {
        throw std::invalid_argument("L = l_c * l_s = " + std::to_string(l()) +
                                    " must divide n_subcarriers = " + std::to_string(params.n_subcarriers));
    }
    if (params.n_symbols % l_s != 0) {
        throw std::invalid_argument("l_s = " + std::to_string(l_s) +
                                    " must divide n_symbols = " + std::to_string(params.n_symbols));
    }
}

RadarMetrics derive_metrics(const RadarParams& params, double speed_of_light) {
    RadarMetrics m;
    m.speed_of_light = speed_of_light;
    m.n_subcarriers = params.n_subcarriers;
    m.n_symbols = params.n_symbols;
    m.bandwidth = params.bandwidth();
    m.range_resolution = speed_of_light / (2.0 * m.bandwidth);
    m.r_max = speed_of_light / (2.0 * params.subcarrier_spacing);
    m.wavelength = speed_of_light / params.carrier_freq;
    const double ts = params.total_symbol_duration();
    m.velocity_resolution = m.wavelength / (2.0 * static_cast<double>(params.n_symbols) * ts);
    m.v_max = m.wavelength / (4.0 * ts);
    return m;
}

UnambiguousLimits unambiguous_limits(const RadarMetrics& metrics, const CodeConfig& code) {
    return {metrics.r_max / static_cast<double>(code.l_c), metrics.v_max / static_cast<double>(code.l_s)};
}

RadarParams table1_params() {
    RadarParams p;
    p.n_subcarriers = 2048;
    p.n_symbols = 256;
    p.subcarrier_spacing = 1e9 / 2048.0;
    p.carrier_freq = 77e9;
    p.cp_duration = 0.512e-6;
    return p;
}

RadarParams lsweep_params() {
    RadarParams p = table1_params();
    p.n_symbols = 10;
    p.carrier_freq = 60.98e9;
    return p;
}

}  // namespace pcsns
