#pragma once

// Independent reference implementations used as test oracles. They share no
// code with the library: plain O(n^2) sums and direct textbook formulas.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "pcsns/channel.hpp"
#include "pcsns/matrix.hpp"
#include "pcsns/params.hpp"

namespace oracle {

using pcsns::Complex;
using pcsns::SymbolMatrix;

inline Complex cis(double radians) { return {std::cos(radians), std::sin(radians)}; }

/// sum_t x[t] e^{sign j 2 pi k t / n}.
inline std::vector<Complex> dft(const std::vector<Complex>& x, int sign) {
    const std::size_t n = x.size();
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t t = 0; t < n; ++t) {
            const double frac = static_cast<double>((k * t) % n) / static_cast<double>(n);
            acc += x[t] * cis(sign * 2.0 * std::numbers::pi * frac);
        }
        out[k] = acc;
    }
    return out;
}

/// Direct evaluation of X(m, n) = sum_k a_k exp(-j 2 pi m df tau_k) exp(+j 2 pi n fD_k Ts), m, n from 1.
inline SymbolMatrix target_matrix(const pcsns::TargetScenario& sc, const pcsns::RadarParams& p, double c) {
    const double lambda = c / p.carrier_freq;
    const double ts = 1.0 / p.subcarrier_spacing + p.cp_duration;
    SymbolMatrix x(p.n_subcarriers, p.n_symbols);
    for (std::size_t m = 1; m <= p.n_subcarriers; ++m) {
        for (std::size_t n = 1; n <= p.n_symbols; ++n) {
            Complex acc{};
            for (const auto& t : sc.targets) {
                const double tau = 2.0 * t.range / c;
                const double fd = 2.0 * t.velocity / lambda;
                acc += t.amplitude * std::exp(Complex(0.0, -2.0 * std::numbers::pi * m * p.subcarrier_spacing * tau)) *
                       std::exp(Complex(0.0, 2.0 * std::numbers::pi * n * fd * ts));
            }
            x(m - 1, n - 1) = acc;
        }
    }
    return x;
}

/// Z(r, n) = sum_j S(j M + r, n) with a scalar triple loop.
inline SymbolMatrix fold(const SymbolMatrix& s, std::size_t l) {
    const std::size_t m = s.rows() / l;
    SymbolMatrix z(m, s.cols());
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t n = 0; n < s.cols(); ++n) {
            Complex acc{};
            for (std::size_t j = 0; j < l; ++j) {
                acc += s(j * m + r, n);
            }
            z(r, n) = acc;
        }
    }
    return z;
}

/// Time code Q_q entry at symbol n (1-based).
inline Complex q_entry(std::size_t q, std::size_t n, std::size_t ls) {
    return cis(2.0 * std::numbers::pi * static_cast<double>(q * n) / static_cast<double>(ls));
}

/// Frequency code P_p^(q) entry at local row m (1-based): e^{j 2 pi p ((q - 1) M + m) / L_c}.
inline Complex p_entry(std::size_t p, std::size_t q, std::size_t m, std::size_t block_rows, std::size_t lc) {
    return cis(2.0 * std::numbers::pi * static_cast<double>(p * ((q - 1) * block_rows + m)) / static_cast<double>(lc));
}

/// Power of the unshifted 2-D periodogram cell (range bin k, Doppler bin l) by direct summation.
inline double periodogram_cell(const SymbolMatrix& d, std::size_t k, std::size_t l) {
    const std::size_t nc = d.rows();
    const std::size_t ns = d.cols();
    Complex acc{};
    for (std::size_t m = 0; m < nc; ++m) {
        for (std::size_t n = 0; n < ns; ++n) {
            const double phase = static_cast<double>((m * k) % nc) / static_cast<double>(nc) -
                                 static_cast<double>((n * l) % ns) / static_cast<double>(ns);
            acc += d(m, n) * cis(2.0 * std::numbers::pi * phase);
        }
    }
    return std::norm(acc);
}

inline double frobenius(const SymbolMatrix& a) {
    double s = 0.0;
    for (const auto& v : a.data()) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

inline double rel_error(const SymbolMatrix& a, const SymbolMatrix& b) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a.data()[i] - b.data()[i]);
        den += std::norm(b.data()[i]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

inline double max_abs_diff(const SymbolMatrix& a, const SymbolMatrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

}  // namespace oracle
