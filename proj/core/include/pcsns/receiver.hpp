#pragma once

#include <cstddef>
#include <string_view>

#include "pcsns/channel.hpp"
#include "pcsns/matrix.hpp"
#include "pcsns/params.hpp"

namespace pcsns {

/// Receiver operating mode: full-rate, plain sub-Nyquist unfolding, or phase-coded sub-Nyquist.
enum class Mode { full, sns, pc_sns };

Mode parse_mode(std::string_view name);
std::string_view to_string(Mode mode);

/// Aliased sub-band Z, (N_c/L) x N_s.
struct FoldedFrame {
    SymbolMatrix entries;
    std::size_t l = 1;
    Mode mode = Mode::full;
};

/// Full-band estimate D, N_c x N_s.
struct UnfoldedFrame {
    SymbolMatrix entries;
    Mode mode = Mode::full;
};

/// Z = sum_j S_j over the L stacked row blocks of s.
FoldedFrame fold_frequency(const SymbolMatrix& s, std::size_t l, Mode mode);
FoldedFrame fold_frequency(const SymbolMatrix& s, std::size_t l);

/**
 * Sub-Nyquist sampling of a full-rate stream: per symbol, drop the CP, keep
 * every L-th body sample, take an (N_c/L)-point forward DFT and scale by 1/(N_c/L)
 * (the full-rate demodulation scale of 1/N_c, times L). Row r of the result
 * is the alias of subcarriers r + 1 + j N_c/L, j = 0..L-1, matching fold_frequency.
 */
FoldedFrame fold_time(const SampleStream& stream, std::size_t l, const RadarParams& params, Mode mode);
FoldedFrame fold_time(const SampleStream& stream, std::size_t l, const RadarParams& params);

/// Full-rate OFDM demodulation (fold_time with L = 1).
SymbolMatrix demodulate(const SampleStream& stream, const RadarParams& params);

/// Divisors smaller than this are rejected by unfold.
inline constexpr double kMinDivisorModulus = 1e-6;

/**
 * D block k = Z (/) C_k for every sub-band k of the known transmit frame.
 * For PC-SNS frames the block order is the assembly order (q fastest), so
 * block k is Z (/) C_pq; for SNS frames it is Z (/) C_i.
 */
UnfoldedFrame unfold(const FoldedFrame& z, const SymbolMatrix& tx, Mode mode);

}  // namespace pcsns
