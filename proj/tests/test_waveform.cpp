#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pcsns/waveform.hpp"

using namespace pcsns;

namespace {

RadarParams small_params(std::size_t nc, std::size_t ns) {
    RadarParams p = table1_params();
    p.n_subcarriers = nc;
    p.n_symbols = ns;
    return p;
}

bool all_equal(const SymbolMatrix& m, Complex v, double tol) {
    for (const auto& x : m.data()) {
        if (std::abs(x - v) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("gen_symbols is deterministic and stays on the QPSK alphabet") {
    const SymbolMatrix a = gen_symbols(7, Constellation::qpsk, 4, 4);
    const SymbolMatrix b = gen_symbols(7, Constellation::qpsk, 4, 4);
    CHECK(a == b);
    CHECK_FALSE(a == gen_symbols(8, Constellation::qpsk, 4, 4));
    const std::array<Complex, 4> alphabet{oracle::cis(std::numbers::pi / 4), oracle::cis(3 * std::numbers::pi / 4),
                                          oracle::cis(5 * std::numbers::pi / 4), oracle::cis(7 * std::numbers::pi / 4)};
    for (const auto& v : a.data()) {
        bool hit = false;
        for (const auto& s : alphabet) {
            hit = hit || std::abs(v - s) < 1e-15;
        }
        CHECK(hit);
        CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
    }
}

TEST_CASE("QPSK point frequencies pass a chi-square test") {
    const std::size_t rows = 512;
    const std::size_t cols = 256;
    const SymbolMatrix s = gen_symbols(7, Constellation::qpsk, rows, cols);
    std::array<double, 4> counts{};
    for (const auto& v : s.data()) {
        const std::size_t quadrant = v.real() > 0 ? (v.imag() > 0 ? 0 : 3) : (v.imag() > 0 ? 1 : 2);
        counts[quadrant] += 1.0;
    }
    const double n = static_cast<double>(rows * cols);
    const double expected = n / 4.0;
    const double sigma = std::sqrt(n * 0.25 * 0.75);
    double chi2 = 0.0;
    for (double c : counts) {
        CHECK(std::abs(c - expected) < 4.0 * sigma);
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // 99.9th percentile of chi-square with 3 degrees of freedom.
    CHECK(chi2 < 16.27);
}

TEST_CASE("QAM16 alphabet has unit average power and a bounded minimum modulus") {
    const auto& pts = constellation_points(Constellation::qam16);
    REQUIRE(pts.size() == 16);
    double p = 0.0;
    for (const auto& v : pts) {
        p += std::norm(v);
    }
    CHECK(p / 16.0 == doctest::Approx(1.0).epsilon(1e-12));
    const SymbolMatrix s = gen_symbols(3, Constellation::qam16, 64, 16);
    CHECK(min_modulus(s) == doctest::Approx(std::sqrt(0.2)).epsilon(1e-12));
    CHECK(parse_constellation("qam16") == Constellation::qam16);
    CHECK_THROWS_AS(parse_constellation("qam64"), std::invalid_argument);
}

TEST_CASE("time code entries") {
    const RadarParams p = small_params(16, 8);
    SUBCASE("q = L_s gives all ones") {
        CHECK(all_equal(time_code(4, {1, 4}, p), {1.0, 0.0}, 1e-15));
    }
    SUBCASE("L_s = 2, q = 1 alternates -1, +1") {
        const SymbolMatrix q = time_code(1, {1, 2}, p);
        CHECK(q.rows() == 8);
        for (std::size_t n = 0; n < 8; ++n) {
            const Complex want = n % 2 == 0 ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
            for (std::size_t r = 0; r < q.rows(); ++r) {
                CHECK(std::abs(q(r, n) - want) < 1e-15);
            }
        }
    }
    SUBCASE("L_s = 4, q = 1 cycles j, -1, -j, 1") {
        const SymbolMatrix q = time_code(1, {1, 4}, p);
        const std::array<Complex, 4> cycle{Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}, Complex{1, 0}};
        for (std::size_t n = 0; n < 8; ++n) {
            CHECK(std::abs(q(0, n) - cycle[n % 4]) < 1e-15);
        }
    }
    SUBCASE("out of range index") {
        CHECK_THROWS_AS(time_code(0, {1, 4}, p), std::out_of_range);
        CHECK_THROWS_AS(time_code(5, {1, 4}, p), std::out_of_range);
    }
}

TEST_CASE("frequency code entries") {
    SUBCASE("p = L_c gives all ones for every q") {
        const RadarParams p = small_params(32, 4);
        for (std::size_t q = 1; q <= 2; ++q) {
            CHECK(all_equal(freq_code_block(4, q, {4, 2}, p), {1.0, 0.0}, 1e-15));
        }
    }
    SUBCASE("L_c = 2, L_s = 1, p = 1 with 4 rows alternates -1, +1") {
        const RadarParams p = small_params(8, 2);
        const SymbolMatrix b = freq_code_block(1, 1, {2, 1}, p);
        REQUIRE(b.rows() == 4);
        const std::array<double, 4> want{-1, 1, -1, 1};
        for (std::size_t m = 0; m < 4; ++m) {
            CHECK(std::abs(b(m, 0) - want[m]) < 1e-15);
            CHECK(std::abs(b(m, 1) - want[m]) < 1e-15);
        }
    }
    SUBCASE("stacked blocks form one continuous ramp") {
        const RadarParams p = small_params(48, 6);
        const CodeConfig cfg{4, 3};
        const std::size_t rows = p.n_subcarriers / cfg.l_c;
        for (std::size_t pi = 1; pi <= cfg.l_c; ++pi) {
            const SymbolMatrix stacked = freq_code(static_cast<long long>(pi), cfg, p);
            REQUIRE(stacked.rows() == rows);
            for (std::size_t m = 1; m <= rows; ++m) {
                const Complex want =
                    oracle::cis(2.0 * std::numbers::pi * static_cast<double>(pi * m) / static_cast<double>(cfg.l_c));
                CHECK(std::abs(stacked(m - 1, 3) - want) < 1e-12);
            }
            for (std::size_t q = 1; q <= cfg.l_s; ++q) {
                const SymbolMatrix blk = freq_code_block(pi, q, cfg, p);
                for (std::size_t m = 1; m <= blk.rows(); ++m) {
                    CHECK(std::abs(blk(m - 1, 0) - oracle::p_entry(pi, q, m, blk.rows(), cfg.l_c)) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("code periodicity and recurrences") {
    const RadarParams p = small_params(64, 8);
    for (const CodeConfig cfg : {CodeConfig{4, 2}, CodeConfig{2, 4}, CodeConfig{8, 1}, CodeConfig{1, 8}}) {
        const auto lc = static_cast<long long>(cfg.l_c);
        const auto ls = static_cast<long long>(cfg.l_s);
        for (long long pi = 1; pi <= lc; ++pi) {
            CHECK(oracle::max_abs_diff(freq_code(pi + lc, cfg, p), freq_code(pi, cfg, p)) < 1e-12);
            const SymbolMatrix rec = hadamard(freq_code(pi - 1, cfg, p), freq_code(1, cfg, p));
            CHECK(oracle::max_abs_diff(freq_code(pi, cfg, p), rec) < 1e-12);
        }
        for (long long q = 1; q <= ls; ++q) {
            CHECK(oracle::max_abs_diff(time_code_any(q + ls, cfg, p), time_code_any(q, cfg, p)) < 1e-12);
            const SymbolMatrix rec = hadamard(time_code_any(q - 1, cfg, p), time_code_any(1, cfg, p));
            CHECK(oracle::max_abs_diff(time_code_any(q, cfg, p), rec) < 1e-12);
        }
    }
}

TEST_CASE("assemble_pc_frame") {
    SUBCASE("no coding returns the sub-frame") {
        const RadarParams p = small_params(16, 4);
        const SymbolMatrix c = gen_symbols(1, Constellation::qpsk, 16, 4);
        CHECK(assemble_pc_frame(c, PhaseCodeSet({1, 1}, p)) == c);
    }
    SUBCASE("4 x 1 hand-evaluated case") {
        const RadarParams p = small_params(4, 1);
        const SymbolMatrix ones(2, 1, Complex{1.0, 0.0});
        const SymbolMatrix c = assemble_pc_frame(ones, PhaseCodeSet({2, 1}, p));
        const std::array<double, 4> want{-1, 1, 1, 1};
        for (std::size_t m = 0; m < 4; ++m) {
            CHECK(std::abs(c(m, 0) - want[m]) < 1e-15);
        }
    }
    SUBCASE("block layout, q fastest, matches the scalar formula") {
        const RadarParams p = small_params(24, 6);
        const CodeConfig cfg{2, 3};
        const std::size_t mrows = 4;
        const SymbolMatrix sub = gen_symbols(5, Constellation::qpsk, mrows, 6);
        const SymbolMatrix c = assemble_pc_frame(sub, PhaseCodeSet(cfg, p));
        CHECK(min_modulus(c) == doctest::Approx(1.0).epsilon(1e-12));
        for (std::size_t pi = 1; pi <= 2; ++pi) {
            for (std::size_t q = 1; q <= 3; ++q) {
                const std::size_t first = ((pi - 1) * 3 + (q - 1)) * mrows;
                CHECK(block_index(pi, q, cfg) * mrows == first);
                for (std::size_t m = 1; m <= mrows; ++m) {
                    for (std::size_t n = 1; n <= 6; ++n) {
                        const Complex want =
                            sub(m - 1, n - 1) * oracle::p_entry(pi, q, m, mrows, 2) * oracle::q_entry(q, n, 3);
                        CHECK(std::abs(c(first + m - 1, n - 1) - want) < 1e-12);
                    }
                }
            }
        }
    }
    SUBCASE("dimension mismatch") {
        const RadarParams p = small_params(16, 4);
        CHECK_THROWS_AS(assemble_pc_frame(SymbolMatrix(3, 4), PhaseCodeSet({2, 2}, p)), std::invalid_argument);
    }
}

TEST_CASE("assemble_sns_frame") {
    const RadarParams p = small_params(256, 8);
    const SymbolMatrix a = assemble_sns_frame(4, Constellation::qpsk, p, 2);
    CHECK(a == assemble_sns_frame(4, Constellation::qpsk, p, 2));
    CHECK(assemble_sns_frame(4, Constellation::qpsk, p, 1) == gen_symbols(4, Constellation::qpsk, 256, 8));
    CHECK_THROWS_AS(assemble_sns_frame(4, Constellation::qpsk, p, 3), std::invalid_argument);

    // Two 1024-entry blocks of independent symbols are nearly uncorrelated.
    Complex corr{};
    for (std::size_t n = 0; n < 8; ++n) {
        for (std::size_t m = 0; m < 128; ++m) {
            corr += a(m, n) * std::conj(a(128 + m, n));
        }
    }
    CHECK(std::abs(corr) / 1024.0 < 0.1);
}

TEST_CASE("code interference matrix") {
    SUBCASE("no coding gives all ones") {
        const RadarParams p = small_params(8, 4);
        CHECK(all_equal(code_interference_matrix(PhaseCodeSet({1, 1}, p), 1, 1), {1.0, 0.0}, 1e-15));
    }
    SUBCASE("L_c = L_s = 2 on 8 x 4 matches a scalar double loop") {
        const RadarParams p = small_params(8, 4);
        const CodeConfig cfg{2, 2};
        const PhaseCodeSet codes(cfg, p);
        for (std::size_t a = 1; a <= 2; ++a) {
            for (std::size_t b = 1; b <= 2; ++b) {
                const SymbolMatrix y = code_interference_matrix(codes, a, b);
                for (std::size_t m = 1; m <= 2; ++m) {
                    for (std::size_t n = 1; n <= 4; ++n) {
                        Complex want{};
                        for (std::size_t pi = 1; pi <= 2; ++pi) {
                            for (std::size_t q = 1; q <= 2; ++q) {
                                want += oracle::p_entry(pi, q, m, 2, 2) * oracle::q_entry(q, n, 2) /
                                        (oracle::p_entry(a, b, m, 2, 2) * oracle::q_entry(b, n, 2));
                            }
                        }
                        CHECK(std::abs(y(m - 1, n - 1) - want) < 1e-12);
                    }
                }
            }
        }
    }
    SUBCASE("literal frame blocks give the same matrix as the code set") {
        const RadarParams p = small_params(64, 8);
        const CodeConfig cfg{4, 2};
        const PhaseCodeSet codes(cfg, p);
        const SymbolMatrix frame = assemble_pc_frame(gen_symbols(2, Constellation::qpsk, 8, 8), codes);
        for (std::size_t a = 1; a <= 4; ++a) {
            for (std::size_t b = 1; b <= 2; ++b) {
                CHECK(oracle::max_abs_diff(code_interference_matrix(frame, cfg, a, b),
                                           code_interference_matrix(codes, a, b)) < 1e-9);
            }
        }
    }
}

TEST_CASE("interference matrix is block independent exactly when L_c divides N_c / L or L_s = 1") {
    const RadarParams p = small_params(64, 8);
    for (std::size_t lc = 1; lc <= 16; ++lc) {
        for (std::size_t ls = 1; lc * ls <= 16; ++ls) {
            if (64 % (lc * ls) != 0 || 8 % ls != 0) {
                continue;
            }
            CAPTURE(lc);
            CAPTURE(ls);
            const PhaseCodeSet codes({lc, ls}, p);
            const SymbolMatrix y11 = code_interference_matrix(codes, 1, 1);
            double spread = 0.0;
            for (std::size_t a = 1; a <= lc; ++a) {
                for (std::size_t b = 1; b <= ls; ++b) {
                    spread = std::max(spread, oracle::max_abs_diff(code_interference_matrix(codes, a, b), y11));
                }
            }
            const bool expected_independent = ls == 1 || codes.block_rows() % lc == 0;
            CHECK((spread <= 1e-9) == expected_independent);
        }
    }
}
