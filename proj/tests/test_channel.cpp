#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pcsns/channel.hpp"
#include "pcsns/receiver.hpp"
#include "pcsns/waveform.hpp"

using namespace pcsns;

namespace {

constexpr double kC = 3e8;

// 16 subcarriers at 1 MHz: B = 16 MHz, a 4-sample CP and 9.375 m range bins.
RadarParams tiny_params() {
    RadarParams p;
    p.n_subcarriers = 16;
    p.n_symbols = 8;
    p.subcarrier_spacing = 1e6;
    p.carrier_freq = 77e9;
    p.cp_duration = 0.25e-6;
    return p;
}

TargetScenario single(double range, double velocity, Complex amp = {1.0, 0.0}) {
    TargetScenario sc;
    sc.targets.push_back({range, velocity, amp});
    return sc;
}

}  // namespace

TEST_CASE("target matrix special cases") {
    const RadarParams p = table1_params();
    const RadarMetrics m = derive_metrics(p, kC);
    SUBCASE("a static target at zero range gives all ones") {
        const SymbolMatrix x = target_matrix(single(0.0, 0.0), p, m);
        for (const auto& v : x.data()) {
            CHECK(std::abs(v - Complex{1.0, 0.0}) < 1e-12);
        }
    }
    SUBCASE("half the maximum range alternates sign along subcarriers") {
        const SymbolMatrix x = target_matrix(single(m.r_max / 2.0, 0.0), p, m);
        for (std::size_t r = 0; r < 64; ++r) {
            const double want = (r + 1) % 2 == 0 ? 1.0 : -1.0;
            CHECK(std::abs(x(r, 5) - want) < 1e-9);
        }
    }
    SUBCASE("direct formula on the reference numerology") {
        TargetScenario sc = single(16.0, 10.0, {0.5, -0.25});
        sc.targets.push_back({250.3, -120.0, {1.0, 0.0}});
        const SymbolMatrix x = target_matrix(sc, p, m);
        CHECK(oracle::rel_error(x, oracle::target_matrix(sc, p, kC)) < 1e-9);
    }
}

TEST_CASE("target matrix is linear in the targets") {
    const RadarParams p = tiny_params();
    const RadarMetrics m = derive_metrics(p, kC);
    const TargetScenario a = single(20.0, 3.0, {2.0, 1.0});
    const TargetScenario b = single(55.5, -40.0, {0.0, -0.7});
    TargetScenario both = a;
    both.targets.push_back(b.targets[0]);
    const SymbolMatrix xa = target_matrix(a, p, m);
    const SymbolMatrix xb = target_matrix(b, p, m);
    SymbolMatrix sum = xa;
    for (std::size_t i = 0; i < sum.size(); ++i) {
        sum.data()[i] += xb.data()[i];
    }
    CHECK(oracle::max_abs_diff(target_matrix(both, p, m), sum) < 1e-12);
    CHECK(oracle::rel_error(target_matrix(both, p, m), oracle::target_matrix(both, p, kC)) < 1e-12);
}

TEST_CASE("noise matrix statistics and determinism") {
    const SymbolMatrix w = noise_matrix(512, 64, 0.3, 99);
    double p = 0.0;
    for (const auto& v : w.data()) {
        p += std::norm(v);
    }
    CHECK(p / static_cast<double>(w.size()) == doctest::Approx(0.3).epsilon(0.05));
    CHECK(w == noise_matrix(512, 64, 0.3, 99));
    CHECK_FALSE(w == noise_matrix(512, 64, 0.3, 100));
    const SymbolMatrix z = noise_matrix(4, 4, 0.0, 1);
    for (const auto& v : z.data()) {
        CHECK(v == Complex{});
    }
}

TEST_CASE("apply_channel") {
    const RadarParams p = tiny_params();
    const RadarMetrics m = derive_metrics(p, kC);
    const SymbolMatrix c = gen_symbols(3, Constellation::qpsk, 16, 8);
    SUBCASE("a unit target at zero range returns the transmit frame") {
        CHECK(oracle::max_abs_diff(apply_channel(c, single(0.0, 0.0), p, m), c) < 1e-12);
    }
    SUBCASE("S = C (.) X + W") {
        TargetScenario sc = single(30.0, 12.0);
        sc.noise_power = 0.1;
        sc.noise_seed = 5;
        const SymbolMatrix s = apply_channel(c, sc, p, m);
        const SymbolMatrix x = oracle::target_matrix(sc, p, kC);
        const SymbolMatrix w = noise_matrix(16, 8, 0.1, 5);
        for (std::size_t r = 0; r < 16; ++r) {
            for (std::size_t n = 0; n < 8; ++n) {
                CHECK(std::abs(s(r, n) - (c(r, n) * x(r, n) + w(r, n))) < 1e-12);
            }
        }
    }
    SUBCASE("shape and scenario errors") {
        CHECK_THROWS_AS(apply_channel(SymbolMatrix(8, 8), single(1.0, 0.0), p, m), std::invalid_argument);
        CHECK_THROWS_AS(apply_channel(c, single(-1.0, 0.0), p, m), std::invalid_argument);
        CHECK_THROWS_AS(apply_channel(c, single(1.0, 0.0, {0.0, 0.0}), p, m), std::invalid_argument);
        TargetScenario bad = single(1.0, 0.0);
        bad.noise_power = -1.0;
        CHECK_THROWS_AS(apply_channel(c, bad, p, m), std::invalid_argument);
    }
}

TEST_CASE("time-domain synthesis") {
    const RadarParams p = tiny_params();
    CHECK(cp_samples(p) == 4);
    SUBCASE("a single active subcarrier is a pure complex exponential") {
        SymbolMatrix c(16, 8);
        c(2, 0) = Complex{1.0, 0.0};
        const SampleStream s = synth_time_domain(c, p);
        CHECK(s.body_length == 16);
        CHECK(s.cp_length == 4);
        CHECK(s.samples.size() == 8 * 20);
        CHECK(s.sample_rate == doctest::Approx(16e6));
        for (std::size_t t = 0; t < 16; ++t) {
            const Complex want = oracle::cis(2.0 * std::numbers::pi * 3.0 * static_cast<double>(t) / 16.0);
            CHECK(std::abs(s.samples[4 + t] - want) < 1e-12);
        }
        for (std::size_t t = 0; t < 4; ++t) {
            CHECK(std::abs(s.samples[t] - s.samples[16 + t]) < 1e-12);
        }
        for (std::size_t t = 20; t < s.samples.size(); ++t) {
            CHECK(std::abs(s.samples[t]) < 1e-12);
        }
    }
    SUBCASE("demodulation inverts synthesis") {
        const SymbolMatrix c = gen_symbols(4, Constellation::qam16, 16, 8);
        CHECK(oracle::max_abs_diff(demodulate(synth_time_domain(c, p), p), c) < 1e-12);
    }
    SUBCASE("fractional CP lengths are rejected") {
        RadarParams q = p;
        q.cp_duration = 0.26e-6;
        CHECK_THROWS_AS(cp_samples(q), std::invalid_argument);
    }
}

TEST_CASE("time-domain channel matches the frequency-domain model") {
    const RadarParams p = tiny_params();
    const RadarMetrics m = derive_metrics(p, kC);
    const SymbolMatrix c = gen_symbols(8, Constellation::qpsk, 16, 8);
    TargetScenario sc;
    sc.targets.push_back({2.0 * m.range_resolution, 900.0, {1.0, 0.0}});
    sc.targets.push_back({4.0 * m.range_resolution, -300.0, {0.3, 0.4}});
    sc.targets.push_back({0.0, 50.0, {0.0, -0.5}});
    const SymbolMatrix time_path = demodulate(apply_channel_time(synth_time_domain(c, p), sc, p, m), p);
    CHECK(oracle::rel_error(time_path, apply_channel(c, sc, p, m)) < 1e-9);

    SUBCASE("delays must be whole samples inside the CP") {
        CHECK_THROWS_AS(apply_channel_time(synth_time_domain(c, p), single(0.5 * m.range_resolution, 0.0), p, m),
                        std::invalid_argument);
        CHECK_THROWS_AS(apply_channel_time(synth_time_domain(c, p), single(5.0 * m.range_resolution, 0.0), p, m),
                        std::invalid_argument);
    }
    SUBCASE("time-domain noise demodulates to the requested per-entry variance") {
        RadarParams big = p;
        big.n_symbols = 400;
        TargetScenario noisy = single(0.0, 0.0);
        noisy.noise_power = 0.2;
        const SymbolMatrix tx(16, 400, Complex{1.0, 0.0});
        const SymbolMatrix rx = demodulate(apply_channel_time(synth_time_domain(tx, big), noisy, big, m), big);
        double pw = 0.0;
        for (const auto& v : rx.data()) {
            pw += std::norm(v - Complex{1.0, 0.0});
        }
        CHECK(pw / static_cast<double>(rx.size()) == doctest::Approx(0.2).epsilon(0.05));
    }
}
