#include "pcsns/rdproc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pcsns/fft.hpp"

namespace pcsns {

namespace {

constexpr double kFloorRatio = 1e-30;

std::size_t wrap_index(long long i, std::size_t n) {
    const auto nn = static_cast<long long>(n);
    long long r = i % nn;
    if (r < 0) {
        r += nn;
    }
    return static_cast<std::size_t>(r);
}

std::size_t circular_distance(std::size_t a, std::size_t b, std::size_t n) {
    const std::size_t d = a > b ? a - b : b - a;
    return std::min(d, n - d);
}

bool within_guard(const RangeDopplerMap& map, std::size_t row, std::size_t col, const Peak& pk, std::size_t guard) {
    return circular_distance(row, pk.range_bin, map.range_bins()) <= guard &&
           circular_distance(col, pk.velocity_bin, map.velocity_bins()) <= guard;
}

double to_db(double ratio) { return 10.0 * std::log10(std::max(ratio, kFloorRatio)); }

}  // namespace

Window parse_window(std::string_view name) {
    if (name == "none") {
        return Window::none;
    }
    if (name == "hann") {
        return Window::hann;
    }
    throw std::invalid_argument("unknown window '" + std::string(name) + "' (expected none or hann)");
}

std::string_view to_string(Window w) { return w == Window::none ? "none" : "hann"; }

std::vector<double> hann_window(std::size_t n) {
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i + 1) / static_cast<double>(n + 1)));
    }
    return w;
}

std::size_t RangeDopplerMap::range_bin_of(double range) const {
    return wrap_index(std::llround(range / range_bin_m), range_bins());
}

std::size_t RangeDopplerMap::velocity_col_of(double velocity) const {
    return wrap_index(std::llround(velocity / velocity_bin_mps) + static_cast<long long>(zero_velocity_col),
                      velocity_bins());
}

double RangeDopplerMap::db(std::size_t row, std::size_t col) const {
    return max_power > 0.0 ? to_db(power(row, col) / max_power) : to_db(0.0);
}

RangeDopplerMap range_doppler_map(const SymbolMatrix& d, const RadarParams& params, const RadarMetrics& metrics,
                                  Window window) {
    const std::size_t nc = params.n_subcarriers;
    const std::size_t ns = params.n_symbols;
    if (d.rows() != nc || d.cols() != ns) {
        throw std::invalid_argument("range_doppler_map: frame is " + std::to_string(d.rows()) + "x" +
                                    std::to_string(d.cols()) + ", params expect " + std::to_string(nc) + "x" +
                                    std::to_string(ns));
    }
    std::vector<double> wr(nc, 1.0);
    std::vector<double> wd(ns, 1.0);
    if (window == Window::hann) {
        wr = hann_window(nc);
        wd = hann_window(ns);
    }

    // The 1-based subcarrier/symbol indices only add a per-bin phase, which
    // the squared magnitude drops, so 0-based transforms are used directly.
    SymbolMatrix profile(nc, ns);
    Dft range_idft(nc, Dft::Direction::inverse);
    std::vector<Complex> buf(nc);
    for (std::size_t n = 0; n < ns; ++n) {
        const auto src = d.column(n);
        for (std::size_t m = 0; m < nc; ++m) {
            buf[m] = src[m] * (wr[m] * wd[n]);
        }
        range_idft.execute(buf, profile.column(n));
    }

    RangeDopplerMap map;
    map.power = Grid<double>(nc, ns);
    map.range_bin_m = metrics.range_resolution;
    map.velocity_bin_mps = metrics.velocity_resolution;
    map.zero_velocity_col = ns / 2;
    Dft doppler_dft(ns, Dft::Direction::forward);
    std::vector<Complex> row(ns);
    std::vector<Complex> spec(ns);
    for (std::size_t r = 0; r < nc; ++r) {
        for (std::size_t n = 0; n < ns; ++n) {
            row[n] = profile(r, n);
        }
        doppler_dft.execute(row, spec);
        for (std::size_t k = 0; k < ns; ++k) {
            const double pw = std::norm(spec[k]);
            map.power(r, (k + map.zero_velocity_col) % ns) = pw;
            map.max_power = std::max(map.max_power, pw);
        }
    }
    return map;
}

RangeDopplerMap range_doppler_map(const UnfoldedFrame& d, const RadarParams& params, const RadarMetrics& metrics,
                                  Window window) {
    return range_doppler_map(d.entries, params, metrics, window);
}

double wrap_velocity(double velocity, double v_max) {
    const double span = 2.0 * v_max;
    double w = velocity - span * std::floor((velocity + v_max) / span);
    if (w >= v_max) {
        w -= span;
    }
    return w;
}

std::vector<AmbiguityPoint> predict_ambiguities(const Target& target, const CodeConfig& code,
                                                const RadarMetrics& metrics) {
    std::vector<AmbiguityPoint> out;
    out.reserve(code.l());
    const double range_step = metrics.r_max / static_cast<double>(code.l_c);
    const double velocity_step = 2.0 * metrics.v_max / static_cast<double>(code.l_s);
    for (std::size_t p = 0; p < code.l_c; ++p) {
        double r = std::fmod(target.range + static_cast<double>(p) * range_step, metrics.r_max);
        if (r < 0.0) {
            r += metrics.r_max;
        }
        for (std::size_t q = 0; q < code.l_s; ++q) {
            const double v = wrap_velocity(target.velocity + static_cast<double>(q) * velocity_step, metrics.v_max);
            out.push_back({r, v, p, q});
        }
    }
    return out;
}

NoiseFloor estimate_noise_floor(const RangeDopplerMap& map, const std::vector<Peak>& exclude, std::size_t guard) {
    NoiseFloor nf;
    const std::size_t nr = map.range_bins();
    const std::size_t nv = map.velocity_bins();
    Grid<unsigned char> masked(nr, nv, 0);
    for (const Peak& pk : exclude) {
        const auto g = static_cast<long long>(guard);
        for (long long dr = -g; dr <= g; ++dr) {
            for (long long dv = -g; dv <= g; ++dv) {
                masked(wrap_index(static_cast<long long>(pk.range_bin) + dr, nr),
                       wrap_index(static_cast<long long>(pk.velocity_bin) + dv, nv)) = 1;
            }
        }
    }
    double sum_db = 0.0;
    double sum_lin = 0.0;
    const double ref = map.max_power > 0.0 ? map.max_power : 1.0;
    for (std::size_t c = 0; c < nv; ++c) {
        for (std::size_t r = 0; r < nr; ++r) {
            if (masked(r, c) != 0) {
                continue;
            }
            const double ratio = map.power(r, c) / ref;
            sum_db += to_db(ratio);
            sum_lin += ratio;
            ++nf.bins;
        }
    }
    if (nf.bins == 0) {
        nf.log_mean_db = std::numeric_limits<double>::quiet_NaN();
        nf.linear_mean_db = std::numeric_limits<double>::quiet_NaN();
        return nf;
    }
    const double count = static_cast<double>(nf.bins);
    nf.log_mean_db = sum_db / count + kLogMeanBiasDb;
    nf.linear_mean_db = to_db(sum_lin / count);
    return nf;
}

PeakReport detect_peaks(const RangeDopplerMap& map, double threshold_db, std::size_t guard) {
    if (map.power.empty()) {
        throw std::invalid_argument("detect_peaks: empty map");
    }
    if (!(threshold_db < 0.0)) {
        throw std::invalid_argument("detect_peaks: threshold_db must be negative (relative to the map maximum)");
    }
    const std::size_t nr = map.range_bins();
    const std::size_t nv = map.velocity_bins();
    PeakReport report;
    report.detection_threshold_db = threshold_db;
    report.guard = guard;

    struct Candidate {
        double power;
        std::size_t row;
        std::size_t col;
    };
    std::vector<Candidate> candidates;
    if (map.max_power > 0.0) {
        const double cut = map.max_power * std::pow(10.0, threshold_db / 10.0);
        const auto g = static_cast<long long>(guard);
        for (std::size_t c = 0; c < nv; ++c) {
            for (std::size_t r = 0; r < nr; ++r) {
                const double v = map.power(r, c);
                if (v < cut) {
                    continue;
                }
                bool is_max = true;
                for (long long dv = -g; dv <= g && is_max; ++dv) {
                    const std::size_t cc = wrap_index(static_cast<long long>(c) + dv, nv);
                    for (long long dr = -g; dr <= g; ++dr) {
                        if (map.power(wrap_index(static_cast<long long>(r) + dr, nr), cc) > v) {
                            is_max = false;
                            break;
                        }
                    }
                }
                if (is_max) {
                    candidates.push_back({v, r, c});
                }
            }
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.power > b.power; });

    for (const Candidate& cand : candidates) {
        const bool suppressed = std::any_of(report.peaks.begin(), report.peaks.end(), [&](const Peak& pk) {
            return within_guard(map, cand.row, cand.col, pk, guard);
        });
        if (suppressed) {
            continue;
        }
        Peak pk;
        pk.range_bin = cand.row;
        pk.velocity_bin = cand.col;
        pk.range_m = map.range_at(cand.row);
        pk.velocity_mps = map.velocity_at(cand.col);
        pk.power_db = map.db(cand.row, cand.col);
        report.peaks.push_back(pk);
    }

    const NoiseFloor nf = estimate_noise_floor(map, report.peaks, guard);
    report.noise_floor_db = nf.log_mean_db;
    report.noise_floor_linear_db = nf.linear_mean_db;
    report.noise_bins = nf.bins;

    for (Peak& pk : report.peaks) {
        pk.snr_db = pk.power_db - report.noise_floor_db;
        double side = -std::numeric_limits<double>::infinity();
        auto consider = [&](std::size_t r, std::size_t c) {
            for (const Peak& other : report.peaks) {
                if (within_guard(map, r, c, other, guard)) {
                    return;
                }
            }
            side = std::max(side, map.db(r, c));
        };
        for (std::size_t r = 0; r < nr; ++r) {
            consider(r, pk.velocity_bin);
        }
        for (std::size_t c = 0; c < nv; ++c) {
            consider(pk.range_bin, c);
        }
        pk.pslr_db = pk.power_db - side;
    }
    return report;
}

double compare_noise_floors(const PeakReport& a, const PeakReport& b) {
    return a.noise_floor_db - b.noise_floor_db;
}

}  // namespace pcsns
