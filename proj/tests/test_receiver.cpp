#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pcsns/channel.hpp"
#include "pcsns/receiver.hpp"
#include "pcsns/waveform.hpp"

using namespace pcsns;

namespace {

constexpr double kC = 3e8;

RadarParams sized(std::size_t nc, std::size_t ns) {
    RadarParams p = table1_params();
    p.n_subcarriers = nc;
    p.n_symbols = ns;
    return p;
}

SymbolMatrix ramp(std::size_t rows, std::size_t cols) {
    SymbolMatrix s(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) {
            s(r, c) = Complex{static_cast<double>(r + 1), static_cast<double>(c)};
        }
    }
    return s;
}

}  // namespace

TEST_CASE("mode names") {
    CHECK(parse_mode("full") == Mode::full);
    CHECK(parse_mode("SNS") == Mode::sns);
    CHECK(parse_mode("pc-sns") == Mode::pc_sns);
    CHECK(to_string(Mode::pc_sns) == "pc-sns");
    CHECK_THROWS_AS(parse_mode("cs"), std::invalid_argument);
}

TEST_CASE("frequency-domain folding") {
    SUBCASE("4 x 1 column folded by 2") {
        SymbolMatrix s(4, 1);
        s(0, 0) = 1.0;
        s(1, 0) = 2.0;
        s(2, 0) = 3.0;
        s(3, 0) = 4.0;
        const FoldedFrame z = fold_frequency(s, 2);
        REQUIRE(z.entries.rows() == 2);
        CHECK(z.entries(0, 0) == Complex{4.0, 0.0});
        CHECK(z.entries(1, 0) == Complex{6.0, 0.0});
        CHECK(z.l == 2);
        CHECK(z.mode == Mode::sns);
    }
    SUBCASE("L = 1 is the identity") {
        const SymbolMatrix s = ramp(8, 3);
        CHECK(fold_frequency(s, 1).entries == s);
        CHECK(fold_frequency(s, 1).mode == Mode::full);
    }
    SUBCASE("matches the scalar fold and is linear") {
        const SymbolMatrix a = gen_symbols(1, Constellation::qpsk, 64, 4);
        const SymbolMatrix b = gen_symbols(2, Constellation::qam16, 64, 4);
        for (std::size_t l : {2u, 4u, 16u, 64u}) {
            CHECK(oracle::max_abs_diff(fold_frequency(a, l).entries, oracle::fold(a, l)) < 1e-12);
            SymbolMatrix mix = a;
            for (std::size_t i = 0; i < mix.size(); ++i) {
                mix.data()[i] = 2.0 * a.data()[i] - Complex{0.0, 1.0} * b.data()[i];
            }
            SymbolMatrix want = fold_frequency(a, l).entries;
            const SymbolMatrix zb = fold_frequency(b, l).entries;
            for (std::size_t i = 0; i < want.size(); ++i) {
                want.data()[i] = 2.0 * want.data()[i] - Complex{0.0, 1.0} * zb.data()[i];
            }
            CHECK(oracle::max_abs_diff(fold_frequency(mix, l).entries, want) < 1e-12);
        }
    }
    SUBCASE("a single active subcarrier lands on row i mod M") {
        for (std::size_t i : {0u, 5u, 17u, 31u}) {
            SymbolMatrix s(32, 2);
            s(i, 1) = Complex{0.0, 1.0};
            const FoldedFrame z = fold_frequency(s, 4);
            for (std::size_t r = 0; r < 8; ++r) {
                CHECK(z.entries(r, 1) == (r == i % 8 ? Complex{0.0, 1.0} : Complex{}));
                CHECK(z.entries(r, 0) == Complex{});
            }
        }
    }
    SUBCASE("L must divide the subcarrier count") {
        CHECK_THROWS_AS(fold_frequency(SymbolMatrix(12, 2), 5), std::invalid_argument);
        CHECK_THROWS_AS(fold_frequency(SymbolMatrix(12, 2), 0), std::invalid_argument);
    }
}

TEST_CASE("time-domain decimation agrees with frequency folding") {
    const RadarParams p = sized(256, 4);
    const RadarMetrics m = derive_metrics(p, kC);
    const SymbolMatrix c = gen_symbols(6, Constellation::qpsk, 256, 4);
    TargetScenario sc;
    sc.targets.push_back({3.0 * m.range_resolution, 40.0, {1.0, 0.0}});
    sc.targets.push_back({0.0, -10.0, {0.2, 0.0}});
    const SampleStream rx = apply_channel_time(synth_time_domain(c, p), sc, p, m);
    const SymbolMatrix s = apply_channel(c, sc, p, m);
    for (std::size_t l : {1u, 2u, 8u, 16u}) {
        const FoldedFrame zt = fold_time(rx, l, p);
        CHECK(oracle::rel_error(zt.entries, fold_frequency(s, l).entries) < 1e-6);
        CHECK(zt.l == l);
    }
    CHECK_THROWS_AS(fold_time(rx, 3, p), std::invalid_argument);
    CHECK_THROWS_AS(fold_time(rx, 2, sized(128, 4)), std::invalid_argument);
}

TEST_CASE("unfolding") {
    const RadarParams p = sized(64, 8);
    const RadarMetrics m = derive_metrics(p, kC);
    SUBCASE("L = 1 recovers X exactly without noise") {
        const SymbolMatrix c = gen_symbols(3, Constellation::qam16, 64, 8);
        const TargetScenario sc{{{7.3, 25.0, {0.8, 0.1}}}, 0.0, 1};
        const FoldedFrame z = fold_frequency(apply_channel(c, sc, p, m), 1, Mode::full);
        const UnfoldedFrame d = unfold(z, c, Mode::full);
        CHECK(oracle::rel_error(d.entries, oracle::target_matrix(sc, p, kC)) < 1e-12);
        CHECK(d.mode == Mode::full);
    }
    SUBCASE("PC-SNS general formula and the X (.) Y form for sub-band periodic X") {
        for (const CodeConfig cfg : {CodeConfig{2, 2}, CodeConfig{4, 1}, CodeConfig{1, 4}, CodeConfig{4, 2}}) {
            const std::size_t l = cfg.l();
            const std::size_t rows = p.n_subcarriers / l;
            const PhaseCodeSet codes(cfg, p);
            const SymbolMatrix c = assemble_pc_frame(gen_symbols(9, Constellation::qpsk, rows, 8), codes);

            // A range that is a multiple of L range bins makes X periodic over sub-bands.
            const TargetScenario periodic{{{3.0 * static_cast<double>(l) * m.range_resolution, 30.0, {1.0, 0.0}}},
                                          0.0, 1};
            const SymbolMatrix x = oracle::target_matrix(periodic, p, kC);
            const UnfoldedFrame dp = unfold(fold_frequency(apply_channel(c, periodic, p, m), l, Mode::pc_sns), c,
                                            Mode::pc_sns);
            for (std::size_t a = 1; a <= cfg.l_c; ++a) {
                for (std::size_t b = 1; b <= cfg.l_s; ++b) {
                    const std::size_t first = block_index(a, b, cfg) * rows;
                    const SymbolMatrix y = code_interference_matrix(codes, a, b);
                    const SymbolMatrix got = dp.entries.row_block(first, rows);
                    const SymbolMatrix want = hadamard(x.row_block(first, rows), y);
                    CHECK(oracle::max_abs_diff(got, want) < 1e-9);
                }
            }

            // Arbitrary range: D_k(r) = sum_j X(jM + r) C(jM + r) / C(kM + r).
            const TargetScenario off{{{11.37, -70.0, {0.4, 0.9}}}, 0.0, 1};
            const SymbolMatrix xo = oracle::target_matrix(off, p, kC);
            const UnfoldedFrame d = unfold(fold_frequency(apply_channel(c, off, p, m), l, Mode::pc_sns), c,
                                           Mode::pc_sns);
            double err = 0.0;
            for (std::size_t k = 0; k < l; ++k) {
                for (std::size_t r = 0; r < rows; ++r) {
                    for (std::size_t n = 0; n < 8; ++n) {
                        Complex acc{};
                        for (std::size_t j = 0; j < l; ++j) {
                            acc += xo(j * rows + r, n) * c(j * rows + r, n);
                        }
                        err = std::max(err, std::abs(d.entries(k * rows + r, n) - acc / c(k * rows + r, n)));
                    }
                }
            }
            CHECK(err < 1e-9);
        }
    }
    SUBCASE("SNS with L = 2 against a scalar reference") {
        const SymbolMatrix c = assemble_sns_frame(12, Constellation::qam16, p, 2);
        const TargetScenario sc{{{5.0, 8.0, {1.0, 0.0}}}, 0.01, 4};
        const SymbolMatrix s = apply_channel(c, sc, p, m);
        const UnfoldedFrame d = unfold(fold_frequency(s, 2), c, Mode::sns);
        for (std::size_t r = 0; r < 32; ++r) {
            for (std::size_t n = 0; n < 8; ++n) {
                const Complex z = s(r, n) + s(32 + r, n);
                CHECK(std::abs(d.entries(r, n) - z / c(r, n)) < 1e-12);
                CHECK(std::abs(d.entries(32 + r, n) - z / c(32 + r, n)) < 1e-12);
            }
        }
    }
    SUBCASE("folded noise has L times the per-entry variance") {
        const RadarParams big = sized(2048, 64);
        const RadarMetrics bm = derive_metrics(big, kC);
        const CodeConfig cfg{4, 2};
        const PhaseCodeSet codes(cfg, big);
        const SymbolMatrix c = assemble_pc_frame(gen_symbols(1, Constellation::qpsk, 256, 64), codes);
        const TargetScenario sc{{{0.0, 0.0, {1.0, 0.0}}}, 0.05, 77};
        const UnfoldedFrame d = unfold(fold_frequency(apply_channel(c, sc, big, bm), 8), c, Mode::pc_sns);
        const SymbolMatrix x = oracle::target_matrix(sc, big, kC);
        double pw = 0.0;
        for (std::size_t a = 1; a <= 4; ++a) {
            for (std::size_t b = 1; b <= 2; ++b) {
                const std::size_t first = block_index(a, b, cfg) * 256;
                const SymbolMatrix want = hadamard(x.row_block(first, 256), code_interference_matrix(codes, a, b));
                const SymbolMatrix got = d.entries.row_block(first, 256);
                for (std::size_t i = 0; i < got.size(); ++i) {
                    pw += std::norm(got.data()[i] - want.data()[i]);
                }
            }
        }
        CHECK(pw / static_cast<double>(d.entries.size()) == doctest::Approx(8.0 * 0.05).epsilon(0.1));
    }
    SUBCASE("errors") {
        const SymbolMatrix c = gen_symbols(3, Constellation::qpsk, 64, 8);
        const FoldedFrame z = fold_frequency(c, 2);
        CHECK_THROWS_AS(unfold(z, gen_symbols(3, Constellation::qpsk, 32, 8), Mode::sns), std::invalid_argument);
        CHECK_THROWS_AS(unfold(z, c, Mode::full), std::invalid_argument);
        SymbolMatrix zero = c;
        zero(10, 3) = Complex{};
        CHECK_THROWS_AS(unfold(z, zero, Mode::sns), std::invalid_argument);
    }
}
