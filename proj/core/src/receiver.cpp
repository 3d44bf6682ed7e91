#include "pcsns/receiver.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "pcsns/fft.hpp"
#include "pcsns/waveform.hpp"

namespace pcsns {

namespace {

void require_divides(std::size_t l, std::size_t rows, const char* who) {
    if (l < 1 || rows % l != 0) {
        throw std::invalid_argument(std::string(who) + ": L = " + std::to_string(l) + " must divide " +
                                    std::to_string(rows) + " subcarriers");
    }
}

Mode default_mode(std::size_t l) { return l == 1 ? Mode::full : Mode::sns; }

}  // namespace

Mode parse_mode(std::string_view name) {
    if (name == "full" || name == "FULL") {
        return Mode::full;
    }
    if (name == "sns" || name == "SNS") {
        return Mode::sns;
    }
    if (name == "pc-sns" || name == "PC-SNS" || name == "pc_sns") {
        return Mode::pc_sns;
    }
    throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected full, sns or pc-sns)");
}

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::full: return "full";
        case Mode::sns: return "sns";
        case Mode::pc_sns: return "pc-sns";
    }
    return "?";
}

FoldedFrame fold_frequency(const SymbolMatrix& s, std::size_t l, Mode mode) {
    require_divides(l, s.rows(), "fold_frequency");
    const std::size_t m = s.rows() / l;
    FoldedFrame z{SymbolMatrix(m, s.cols(), Complex{}), l, mode};
    for (std::size_t c = 0; c < s.cols(); ++c) {
        const auto src = s.column(c);
        auto dst = z.entries.column(c);
        for (std::size_t j = 0; j < l; ++j) {
            for (std::size_t r = 0; r < m; ++r) {
                dst[r] += src[j * m + r];
            }
        }
    }
    return z;
}

FoldedFrame fold_frequency(const SymbolMatrix& s, std::size_t l) {
    return fold_frequency(s, l, default_mode(l));
}

FoldedFrame fold_time(const SampleStream& stream, std::size_t l, const RadarParams& params, Mode mode) {
    const std::size_t nc = params.n_subcarriers;
    require_divides(l, nc, "fold_time");
    if (stream.body_length != nc || stream.n_symbols != params.n_symbols ||
        stream.samples.size() != stream.n_symbols * stream.symbol_length()) {
        throw std::invalid_argument("fold_time: stream layout does not match params");
    }
    const std::size_t m = nc / l;
    const double scale = 1.0 / static_cast<double>(m);
    FoldedFrame z{SymbolMatrix(m, params.n_symbols), l, mode};
    Dft dft(m, Dft::Direction::forward);
    std::vector<Complex> decimated(m);
    std::vector<Complex> bins(m);
    for (std::size_t n = 0; n < params.n_symbols; ++n) {
        const Complex* body = stream.samples.data() + n * stream.symbol_length() + stream.cp_length;
        for (std::size_t u = 0; u < m; ++u) {
            decimated[u] = body[u * l];
        }
        dft.execute(decimated, bins);
        auto dst = z.entries.column(n);
        for (std::size_t r = 0; r < m; ++r) {
            dst[r] = bins[(r + 1) % m] * scale;
        }
    }
    return z;
}

FoldedFrame fold_time(const SampleStream& stream, std::size_t l, const RadarParams& params) {
    return fold_time(stream, l, params, default_mode(l));
}

SymbolMatrix demodulate(const SampleStream& stream, const RadarParams& params) {
    return fold_time(stream, 1, params, Mode::full).entries;
}

UnfoldedFrame unfold(const FoldedFrame& z, const SymbolMatrix& tx, Mode mode) {
    const std::size_t m = z.entries.rows();
    if (z.l < 1 || tx.rows() != m * z.l || tx.cols() != z.entries.cols()) {
        throw std::invalid_argument("unfold: transmit frame " + std::to_string(tx.rows()) + "x" +
                                    std::to_string(tx.cols()) + " does not match folded frame " +
                                    std::to_string(m) + "x" + std::to_string(z.entries.cols()) + " with L = " +
                                    std::to_string(z.l));
    }
    if (mode == Mode::full && z.l != 1) {
        throw std::invalid_argument("unfold: full mode requires L = 1");
    }
    if (min_modulus(tx) < kMinDivisorModulus) {
        throw std::invalid_argument("unfold: transmit frame has a near-zero symbol (|c| < 1e-6)");
    }
    UnfoldedFrame d{SymbolMatrix(tx.rows(), tx.cols()), mode};
    for (std::size_t c = 0; c < tx.cols(); ++c) {
        const auto folded = z.entries.column(c);
        const auto sent = tx.column(c);
        auto out = d.entries.column(c);
        for (std::size_t k = 0; k < z.l; ++k) {
            for (std::size_t r = 0; r < m; ++r) {
                out[k * m + r] = folded[r] / sent[k * m + r];
            }
        }
    }
    return d;
}

}  // namespace pcsns
