#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pcsns/matrix.hpp"
#include "pcsns/params.hpp"

namespace pcsns {

enum class Constellation { qpsk, qam16 };

Constellation parse_constellation(std::string_view name);
std::string_view to_string(Constellation c);

/// Unit-average-power constellation points in index order.
const std::vector<Complex>& constellation_points(Constellation c);

/**
 * Deterministic random symbols.
 *
 * Entry (r, c) is drawn in column-major order from Rng(seed); each symbol
 * consumes one 64-bit word whose top log2(M) bits select the point.
 * QPSK index i maps to e^{j pi (2i + 1) / 4}. QAM16 uses a Gray-free
 * 4x4 grid {-3,-1,1,3}/sqrt(10) with index i -> (re = i % 4, im = i / 4).
 */
SymbolMatrix gen_symbols(std::uint64_t seed, Constellation constellation, std::size_t rows, std::size_t cols);

// Phase codes. Indices p, q and the subcarrier/symbol positions m, n inside
// the formulas are 1-based; every phase is reduced exactly in integers
// before the complex exponential is taken, so periodicity holds bit-for-bit.

/// Time-domain code Q_q, (N_c/L) x N_s: entry at symbol n is e^{j 2 pi q n / L_s}.
SymbolMatrix time_code(std::size_t q, const CodeConfig& cfg, const RadarParams& params);

/// Frequency-domain code block P_p^(q), (N_c/L) x N_s: row m carries
/// e^{j 2 pi p ((q - 1) N_c/L + m) / L_c}, i.e. phi_p^{q-1} P_p^(1).
SymbolMatrix freq_code_block(std::size_t p, std::size_t q, const CodeConfig& cfg, const RadarParams& params);

/// Stacked frequency code P_p, (N_c/L_c) x N_s, for any integer p (periodic in L_c).
SymbolMatrix freq_code(long long p, const CodeConfig& cfg, const RadarParams& params);

/// Time code for any integer q (periodic in L_s).
SymbolMatrix time_code_any(long long q, const CodeConfig& cfg, const RadarParams& params);

/// Physical sub-band position of block (p, q): q runs fastest.
inline std::size_t block_index(std::size_t p, std::size_t q, const CodeConfig& cfg) {
    return (p - 1) * cfg.l_s + (q - 1);
}

/// All L_c + L_s code matrices for one numerology and factorization.
class PhaseCodeSet {
public:
    PhaseCodeSet(const CodeConfig& cfg, const RadarParams& params);

    const CodeConfig& config() const { return cfg_; }
    const RadarParams& params() const { return params_; }
    std::size_t block_rows() const { return block_rows_; }

    /// Q_q, 1 <= q <= L_s.
    const SymbolMatrix& time(std::size_t q) const;
    /// P_p stacked over its L_s sub-blocks, 1 <= p <= L_c.
    const SymbolMatrix& freq(std::size_t p) const;
    /// P_p^(q) (a view copied out of freq(p)).
    SymbolMatrix freq_block(std::size_t p, std::size_t q) const;
    /// P_p^(q) (.) Q_q.
    SymbolMatrix combined(std::size_t p, std::size_t q) const;

private:
    CodeConfig cfg_;
    RadarParams params_;
    std::size_t block_rows_;
    std::vector<SymbolMatrix> time_codes_;
    std::vector<SymbolMatrix> freq_codes_;
};

/// C = [C_11; C_12; ...; C_{L_c L_s}] with C_pq = C_sub (.) P_p^(q) (.) Q_q.
SymbolMatrix assemble_pc_frame(const SymbolMatrix& c_sub, const PhaseCodeSet& codes);

/// Conventional full-band random frame (independent symbols on all N_c rows).
SymbolMatrix assemble_sns_frame(std::uint64_t seed, Constellation constellation, const RadarParams& params,
                                std::size_t l);

/// sum_{p,q} (P_p^(q) (.) Q_q) (/) (P_a^(b) (.) Q_b) by direct summation.
SymbolMatrix code_interference_matrix(const PhaseCodeSet& codes, std::size_t a, std::size_t b);

/// sum_{p,q} C_pq (/) C_ab taken literally from the blocks of an assembled frame.
SymbolMatrix code_interference_matrix(const SymbolMatrix& frame, const CodeConfig& cfg, std::size_t a,
                                      std::size_t b);

/// Smallest |entry|; used to guard unfolding divisions.
double min_modulus(const SymbolMatrix& m);

}  // namespace pcsns
