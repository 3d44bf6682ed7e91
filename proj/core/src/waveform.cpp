#include "pcsns/waveform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pcsns/rng.hpp"

namespace pcsns {

namespace {

// e^{j 2 pi num / den}, with the fraction reduced in integers. Quarter turns are exact.
Complex unit_phasor(long long num, long long den) {
    long long r = num % den;
    if (r < 0) {
        r += den;
    }
    if ((4 * r) % den == 0) {
        switch ((4 * r) / den) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den));
}

void require_index(std::size_t idx, std::size_t upper, const char* name) {
    if (idx < 1 || idx > upper) {
        throw std::out_of_range(std::string(name) + " = " + std::to_string(idx) + " outside 1.." +
                                std::to_string(upper));
    }
}

}  // namespace

Constellation parse_constellation(std::string_view name) {
    if (name == "qpsk" || name == "QPSK") {
        return Constellation::qpsk;
    }
    if (name == "qam16" || name == "QAM16" || name == "16qam") {
        return Constellation::qam16;
    }
    throw std::invalid_argument("unknown constellation '" + std::string(name) + "' (expected qpsk or qam16)");
}

std::string_view to_string(Constellation c) {
    return c == Constellation::qpsk ? "qpsk" : "qam16";
}

const std::vector<Complex>& constellation_points(Constellation c) {
    static const std::vector<Complex> qpsk = [] {
        std::vector<Complex> pts;
        for (int i = 0; i < 4; ++i) {
            pts.push_back(std::polar(1.0, std::numbers::pi * (2.0 * i + 1.0) / 4.0));
        }
        return pts;
    }();
    static const std::vector<Complex> qam16 = [] {
        std::vector<Complex> pts;
        const double levels[4] = {-3.0, -1.0, 1.0, 3.0};
        const double scale = 1.0 / std::sqrt(10.0);
        for (int i = 0; i < 16; ++i) {
            pts.emplace_back(levels[i % 4] * scale, levels[i / 4] * scale);
        }
        return pts;
    }();
    return c == Constellation::qpsk ? qpsk : qam16;
}

SymbolMatrix gen_symbols(std::uint64_t seed, Constellation constellation, std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("gen_symbols: rows and cols must be >= 1");
    }
    const auto& pts = constellation_points(constellation);
    Rng rng(seed);
    SymbolMatrix out(rows, cols);
    for (Complex& x : out.data()) {
        x = pts[rng.index(pts.size())];
    }
    return out;
}

SymbolMatrix time_code_any(long long q, const CodeConfig& cfg, const RadarParams& params) {
    cfg.validate(params);
    const auto ls = static_cast<long long>(cfg.l_s);
    SymbolMatrix out(cfg.sub_band_rows(params), params.n_symbols);
    for (std::size_t col = 0; col < out.cols(); ++col) {
        const auto n = static_cast<long long>(col) + 1;
        const Complex v = unit_phasor(q * n, ls);
        for (Complex& x : out.column(col)) {
            x = v;
        }
    }
    return out;
}

SymbolMatrix time_code(std::size_t q, const CodeConfig& cfg, const RadarParams& params) {
    require_index(q, cfg.l_s, "q");
    return time_code_any(static_cast<long long>(q), cfg, params);
}

SymbolMatrix freq_code(long long p, const CodeConfig& cfg, const RadarParams& params) {
    cfg.validate(params);
    const auto lc = static_cast<long long>(cfg.l_c);
    const std::size_t rows = params.n_subcarriers / cfg.l_c;
    SymbolMatrix out(rows, params.n_symbols);
    std::vector<Complex> ramp(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        ramp[r] = unit_phasor(p * static_cast<long long>(r + 1), lc);
    }
    for (std::size_t col = 0; col < out.cols(); ++col) {
        std::copy(ramp.begin(), ramp.end(), out.column(col).begin());
    }
    return out;
}

SymbolMatrix freq_code_block(std::size_t p, std::size_t q, const CodeConfig& cfg, const RadarParams& params) {
    require_index(p, cfg.l_c, "p");
    require_index(q, cfg.l_s, "q");
    const std::size_t m = cfg.sub_band_rows(params);
    return freq_code(static_cast<long long>(p), cfg, params).row_block((q - 1) * m, m);
}

PhaseCodeSet::PhaseCodeSet(const CodeConfig& cfg, const RadarParams& params)
    : cfg_(cfg), params_(params), block_rows_(0) {
    params.validate();
    cfg.validate(params);
    block_rows_ = cfg.sub_band_rows(params);
    for (std::size_t q = 1; q <= cfg.l_s; ++q) {
        time_codes_.push_back(time_code(q, cfg, params));
    }
    for (std::size_t p = 1; p <= cfg.l_c; ++p) {
        freq_codes_.push_back(freq_code(static_cast<long long>(p), cfg, params));
    }
}

const SymbolMatrix& PhaseCodeSet::time(std::size_t q) const {
    require_index(q, cfg_.l_s, "q");
    return time_codes_[q - 1];
}

const SymbolMatrix& PhaseCodeSet::freq(std::size_t p) const {
    require_index(p, cfg_.l_c, "p");
    return freq_codes_[p - 1];
}

SymbolMatrix PhaseCodeSet::freq_block(std::size_t p, std::size_t q) const {
    require_index(q, cfg_.l_s, "q");
    return freq(p).row_block((q - 1) * block_rows_, block_rows_);
}

SymbolMatrix PhaseCodeSet::combined(std::size_t p, std::size_t q) const {
    return hadamard(freq_block(p, q), time(q));
}

SymbolMatrix assemble_pc_frame(const SymbolMatrix& c_sub, const PhaseCodeSet& codes) {
    const auto& cfg = codes.config();
    const auto& params = codes.params();
    if (c_sub.rows() != codes.block_rows() || c_sub.cols() != params.n_symbols) {
        throw std::invalid_argument("assemble_pc_frame: c_sub is " + std::to_string(c_sub.rows()) + "x" +
                                    std::to_string(c_sub.cols()) + ", expected " +
                                    std::to_string(codes.block_rows()) + "x" + std::to_string(params.n_symbols));
    }
    SymbolMatrix frame(params.n_subcarriers, params.n_symbols);
    for (std::size_t p = 1; p <= cfg.l_c; ++p) {
        for (std::size_t q = 1; q <= cfg.l_s; ++q) {
            const SymbolMatrix block = hadamard(c_sub, codes.combined(p, q));
            frame.set_row_block(block_index(p, q, cfg) * codes.block_rows(), block);
        }
    }
    return frame;
}

SymbolMatrix assemble_sns_frame(std::uint64_t seed, Constellation constellation, const RadarParams& params,
                                std::size_t l) {
    params.validate();
    if (l < 1 || params.n_subcarriers % l != 0) {
        throw std::invalid_argument("assemble_sns_frame: L = " + std::to_string(l) +
                                    " must divide n_subcarriers = " + std::to_string(params.n_subcarriers));
    }
    return gen_symbols(seed, constellation, params.n_subcarriers, params.n_symbols);
}

SymbolMatrix code_interference_matrix(const PhaseCodeSet& codes, std::size_t a, std::size_t b) {
    const auto& cfg = codes.config();
    const SymbolMatrix ref = codes.combined(a, b);
    SymbolMatrix sum(codes.block_rows(), codes.params().n_symbols, Complex{});
    for (std::size_t p = 1; p <= cfg.l_c; ++p) {
        for (std::size_t q = 1; q <= cfg.l_s; ++q) {
            const SymbolMatrix ratio = hadamard_divide(codes.combined(p, q), ref);
            for (std::size_t i = 0; i < sum.size(); ++i) {
                sum.data()[i] += ratio.data()[i];
            }
        }
    }
    return sum;
}

SymbolMatrix code_interference_matrix(const SymbolMatrix& frame, const CodeConfig& cfg, std::size_t a,
                                      std::size_t b) {
    require_index(a, cfg.l_c, "a");
    require_index(b, cfg.l_s, "b");
    if (cfg.l() == 0 || frame.rows() % cfg.l() != 0) {
        throw std::invalid_argument("code_interference_matrix: L must divide frame rows");
    }
    const std::size_t m = frame.rows() / cfg.l();
    const SymbolMatrix ref = frame.row_block(block_index(a, b, cfg) * m, m);
    SymbolMatrix sum(m, frame.cols(), Complex{});
    for (std::size_t p = 1; p <= cfg.l_c; ++p) {
        for (std::size_t q = 1; q <= cfg.l_s; ++q) {
            const SymbolMatrix ratio = hadamard_divide(frame.row_block(block_index(p, q, cfg) * m, m), ref);
            for (std::size_t i = 0; i < sum.size(); ++i) {
                sum.data()[i] += ratio.data()[i];
            }
        }
    }
    return sum;
}

double min_modulus(const SymbolMatrix& m) {
    double lo = std::numeric_limits<double>::infinity();
    for (const Complex& x : m.data()) {
        lo = std::min(lo, std::abs(x));
    }
    return lo;
}

}  // namespace pcsns
