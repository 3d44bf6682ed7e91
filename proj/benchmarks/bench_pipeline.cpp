#include <benchmark/benchmark.h>

#include "pcsns/channel.hpp"
#include "pcsns/rdproc.hpp"
#include "pcsns/receiver.hpp"
#include "pcsns/waveform.hpp"

using namespace pcsns;

namespace {

struct Scene {
    RadarParams params = table1_params();
    RadarMetrics metrics = derive_metrics(params, 3e8);
    CodeConfig code{4, 4};
    PhaseCodeSet codes{code, params};
    SymbolMatrix tx = assemble_pc_frame(gen_symbols(1, Constellation::qpsk, code.sub_band_rows(params),
                                                    params.n_symbols),
                                        codes);
    TargetScenario scenario{{Target{16.0, 10.0, {1.0, 0.0}}}, 0.158, 1001};
};

const Scene& scene() {
    static const Scene s;
    return s;
}

void BM_AssemblePcFrame(benchmark::State& state) {
    const Scene& s = scene();
    const SymbolMatrix sub = gen_symbols(1, Constellation::qpsk, s.code.sub_band_rows(s.params), s.params.n_symbols);
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_pc_frame(sub, s.codes));
    }
}
BENCHMARK(BM_AssemblePcFrame)->Unit(benchmark::kMillisecond);

void BM_Channel(benchmark::State& state) {
    const Scene& s = scene();
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_channel(s.tx, s.scenario, s.params, s.metrics));
    }
}
BENCHMARK(BM_Channel)->Unit(benchmark::kMillisecond);

void BM_FoldUnfold(benchmark::State& state) {
    const Scene& s = scene();
    const SymbolMatrix rx = apply_channel(s.tx, s.scenario, s.params, s.metrics);
    for (auto _ : state) {
        benchmark::DoNotOptimize(unfold(fold_frequency(rx, s.code.l(), Mode::pc_sns), s.tx, Mode::pc_sns));
    }
}
BENCHMARK(BM_FoldUnfold)->Unit(benchmark::kMillisecond);

void BM_RangeDopplerMap(benchmark::State& state) {
    const Scene& s = scene();
    const SymbolMatrix rx = apply_channel(s.tx, s.scenario, s.params, s.metrics);
    const UnfoldedFrame d = unfold(fold_frequency(rx, s.code.l(), Mode::pc_sns), s.tx, Mode::pc_sns);
    for (auto _ : state) {
        benchmark::DoNotOptimize(range_doppler_map(d, s.params, s.metrics));
    }
}
BENCHMARK(BM_RangeDopplerMap)->Unit(benchmark::kMillisecond);

void BM_DetectPeaks(benchmark::State& state) {
    const Scene& s = scene();
    const SymbolMatrix rx = apply_channel(s.tx, s.scenario, s.params, s.metrics);
    const RangeDopplerMap map =
        range_doppler_map(unfold(fold_frequency(rx, s.code.l(), Mode::pc_sns), s.tx, Mode::pc_sns), s.params,
                          s.metrics);
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_peaks(map));
    }
}
BENCHMARK(BM_DetectPeaks)->Unit(benchmark::kMillisecond);

void BM_FoldTime(benchmark::State& state) {
    const Scene& s = scene();
    const SampleStream stream = synth_time_domain(s.tx, s.params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fold_time(stream, static_cast<std::size_t>(state.range(0)), s.params));
    }
}
BENCHMARK(BM_FoldTime)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
