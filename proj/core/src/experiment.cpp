#include "pcsns/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "pcsns/channel.hpp"
#include "pcsns/io.hpp"
#include "pcsns/plot.hpp"
#include "pcsns/receiver.hpp"
#include "pcsns/waveform.hpp"

namespace pcsns {

namespace {

std::size_t fold_factor(const ExperimentConfig& cfg) { return cfg.mode == Mode::full ? 1 : cfg.code.l(); }

void prepare_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw ConfigError("output.directory", "cannot create '" + dir.string() + "': " + ec.message());
    }
}

double profile_floor(double noise_floor_db) {
    if (!std::isfinite(noise_floor_db)) {
        return -100.0;
    }
    return std::max(-200.0, std::floor((noise_floor_db - 15.0) / 10.0) * 10.0);
}

nlohmann::json peak_json(const Peak& pk) {
    return {{"range_bin", pk.range_bin}, {"velocity_bin", pk.velocity_bin}, {"range_m", pk.range_m},
            {"velocity_mps", pk.velocity_mps}, {"power_db", pk.power_db}, {"snr_db", pk.snr_db},
            {"pslr_db", pk.pslr_db}};
}

nlohmann::json summary_json(const ExperimentReport& r, const std::vector<std::string>& files) {
    const ExperimentConfig& cfg = r.config;
    nlohmann::json j;
    j["name"] = cfg.name;
    j["schema_version"] = cfg.schema_version;
    j["mode"] = std::string(to_string(cfg.mode));
    j["code"] = {{"l_c", cfg.code.l_c}, {"l_s", cfg.code.l_s}, {"l", cfg.code.l()}};
    j["params"] = {{"n_subcarriers", cfg.params.n_subcarriers},
                   {"n_symbols", cfg.params.n_symbols},
                   {"subcarrier_spacing_hz", cfg.params.subcarrier_spacing},
                   {"carrier_freq_hz", cfg.params.carrier_freq},
                   {"cp_duration_s", cfg.params.cp_duration},
                   {"symbol_duration_s", cfg.params.symbol_duration()},
                   {"total_symbol_duration_s", cfg.params.total_symbol_duration()}};
    j["metrics"] = {{"bandwidth_hz", r.metrics.bandwidth},
                    {"range_resolution_m", r.metrics.range_resolution},
                    {"r_max_m", r.metrics.r_max},
                    {"velocity_resolution_mps", r.metrics.velocity_resolution},
                    {"v_max_mps", r.metrics.v_max},
                    {"wavelength_m", r.metrics.wavelength},
                    {"speed_of_light_mps", r.metrics.speed_of_light}};
    j["unambiguous"] = {{"r_u_m", r.limits.r_u}, {"v_u_mps", r.limits.v_u}};
    j["noise_floor_db"] = r.noise_floor_db;
    j["noise_floor_linear_db"] = r.noise_floor_linear_db;
    j["detection"] = {{"threshold_db", r.peaks.detection_threshold_db},
                      {"guard_bins", r.peaks.guard},
                      {"window", std::string(to_string(cfg.processing.window))},
                      {"noise_bins", r.peaks.noise_bins}};
    nlohmann::json trials = nlohmann::json::array();
    for (const TrialSummary& t : r.trials) {
        trials.push_back({{"trial", t.trial},
                          {"symbol_seed", t.symbol_seed},
                          {"noise_seed", t.noise_seed},
                          {"noise_floor_db", t.noise_floor_db},
                          {"noise_floor_linear_db", t.noise_floor_linear_db},
                          {"n_peaks", t.n_peaks}});
    }
    j["trials"] = trials;
    nlohmann::json peaks = nlohmann::json::array();
    for (const Peak& pk : r.peaks.peaks) {
        peaks.push_back(peak_json(pk));
    }
    j["peaks"] = peaks;
    nlohmann::json predicted = nlohmann::json::array();
    for (const auto& list : r.predicted) {
        nlohmann::json per_target = nlohmann::json::array();
        for (const AmbiguityPoint& a : list) {
            per_target.push_back({{"range_m", a.range}, {"velocity_mps", a.velocity}, {"p", a.p}, {"q", a.q}});
        }
        predicted.push_back(per_target);
    }
    j["predicted_ambiguities"] = predicted;
    j["profile_anchor"] = {{"range_bin", r.profile_range_bin}, {"velocity_bin", r.profile_velocity_bin}};
    j["files"] = files;
    return j;
}

}  // namespace

std::uint64_t trial_symbol_seed(const ExperimentConfig& cfg, std::size_t trial) {
    return cfg.waveform.symbol_seed + trial;
}

std::uint64_t trial_noise_seed(const ExperimentConfig& cfg, std::size_t trial) {
    return cfg.scenario.noise_seed + trial;
}

RadarMetrics config_metrics(const ExperimentConfig& cfg) { return derive_metrics(cfg.params, cfg.speed_of_light); }

SymbolMatrix transmit_frame(const ExperimentConfig& cfg, std::size_t trial) {
    const std::uint64_t seed = trial_symbol_seed(cfg, trial);
    const RadarParams& p = cfg.params;
    switch (cfg.mode) {
        case Mode::full:
            return gen_symbols(seed, cfg.waveform.constellation, p.n_subcarriers, p.n_symbols);
        case Mode::sns:
            return assemble_sns_frame(seed, cfg.waveform.constellation, p, cfg.code.l());
        case Mode::pc_sns: {
            const PhaseCodeSet codes(cfg.code, p);
            const SymbolMatrix c_sub = gen_symbols(seed, cfg.waveform.constellation, codes.block_rows(), p.n_symbols);
            return assemble_pc_frame(c_sub, codes);
        }
    }
    throw std::logic_error("transmit_frame: unknown mode");
}

TrialFrames simulate_frames(const ExperimentConfig& cfg, std::size_t trial) {
    const RadarMetrics metrics = config_metrics(cfg);
    TrialFrames f;
    f.tx = transmit_frame(cfg, trial);
    TargetScenario scenario = cfg.scenario;
    scenario.noise_seed = trial_noise_seed(cfg, trial);
    f.rx = apply_channel(f.tx, scenario, cfg.params, metrics);
    FoldedFrame z = fold_frequency(f.rx, fold_factor(cfg), cfg.mode);
    f.unfolded = unfold(z, f.tx, cfg.mode).entries;
    f.folded = std::move(z.entries);
    return f;
}

RangeDopplerMap simulate_map(const ExperimentConfig& cfg, std::size_t trial) {
    const TrialFrames f = simulate_frames(cfg, trial);
    return range_doppler_map(f.unfolded, cfg.params, config_metrics(cfg), cfg.processing.window);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, bool write_outputs) {
    cfg.validate();
    ExperimentReport r;
    r.config = cfg;
    r.metrics = config_metrics(cfg);
    const CodeConfig effective = cfg.mode == Mode::pc_sns ? cfg.code : CodeConfig{1, 1};
    r.limits = unambiguous_limits(r.metrics, effective);
    for (const Target& t : cfg.scenario.targets) {
        r.predicted.push_back(predict_ambiguities(t, effective, r.metrics));
    }

    double sum_db = 0.0;
    double sum_lin = 0.0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        RangeDopplerMap map = simulate_map(cfg, t);
        PeakReport peaks = detect_peaks(map, cfg.processing.threshold_db, cfg.processing.guard);
        r.trials.push_back({t, trial_symbol_seed(cfg, t), trial_noise_seed(cfg, t), peaks.noise_floor_db,
                            peaks.noise_floor_linear_db, peaks.peaks.size()});
        sum_db += peaks.noise_floor_db;
        sum_lin += peaks.noise_floor_linear_db;
        if (t == 0) {
            r.map = std::move(map);
            r.peaks = std::move(peaks);
        }
    }
    r.noise_floor_db = sum_db / static_cast<double>(cfg.trials);
    r.noise_floor_linear_db = sum_lin / static_cast<double>(cfg.trials);

    if (!cfg.scenario.targets.empty()) {
        r.profile_range_bin = r.map.range_bin_of(cfg.scenario.targets.front().range);
        r.profile_velocity_bin = r.map.velocity_col_of(cfg.scenario.targets.front().velocity);
    } else if (!r.peaks.peaks.empty()) {
        r.profile_range_bin = r.peaks.peaks.front().range_bin;
        r.profile_velocity_bin = r.peaks.peaks.front().velocity_bin;
    } else {
        r.profile_velocity_bin = r.map.zero_velocity_col;
    }

    if (write_outputs && (cfg.output.csv || cfg.output.plots || cfg.output.report)) {
        r.files = write_experiment_outputs(r, cfg.output.directory);
    }
    return r;
}

std::vector<std::filesystem::path> write_experiment_outputs(const ExperimentReport& r,
                                                            const std::filesystem::path& dir) {
    prepare_directory(dir);
    const OutputConfig& out = r.config.output;
    const RangeDopplerMap& map = r.map;
    std::vector<std::filesystem::path> files;

    std::vector<double> range_axis(map.range_bins());
    std::vector<double> range_cut(map.range_bins());
    for (std::size_t i = 0; i < map.range_bins(); ++i) {
        range_axis[i] = map.range_at(i);
        range_cut[i] = map.power(i, r.profile_velocity_bin);
    }
    std::vector<double> vel_axis(map.velocity_bins());
    std::vector<double> vel_cut(map.velocity_bins());
    for (std::size_t c = 0; c < map.velocity_bins(); ++c) {
        vel_axis[c] = map.velocity_at(c);
        vel_cut[c] = map.power(r.profile_range_bin, c);
    }

    if (out.csv) {
        write_map_csv(map, dir / "map.csv");
        write_map_binary(map, dir / "map.bin");
        write_profile_csv(dir / "range_profile.csv", "range_m", range_axis, range_cut, map.max_power);
        write_profile_csv(dir / "doppler_profile.csv", "velocity_mps", vel_axis, vel_cut, map.max_power);
        write_peaks_csv(r.peaks, dir / "peaks.csv");

        CsvWriter trials(dir / "trials.csv");
        trials.row({"trial", "symbol_seed", "noise_seed", "noise_floor_db", "noise_floor_linear_db", "n_peaks"});
        for (const TrialSummary& t : r.trials) {
            trials.row({std::to_string(t.trial), std::to_string(t.symbol_seed), std::to_string(t.noise_seed),
                        format_double(t.noise_floor_db), format_double(t.noise_floor_linear_db),
                        std::to_string(t.n_peaks)});
        }
        trials.close();

        CsvWriter summary(dir / "summary.csv");
        summary.row({"key", "value"});
        summary.row({"name", r.config.name});
        summary.row({"mode", std::string(to_string(r.config.mode))});
        summary.row({"l_c", std::to_string(r.config.code.l_c)});
        summary.row({"l_s", std::to_string(r.config.code.l_s)});
        summary.row({"range_resolution_m", format_double(r.metrics.range_resolution)});
        summary.row({"r_max_m", format_double(r.metrics.r_max)});
        summary.row({"velocity_resolution_mps", format_double(r.metrics.velocity_resolution)});
        summary.row({"v_max_mps", format_double(r.metrics.v_max)});
        summary.row({"r_u_m", format_double(r.limits.r_u)});
        summary.row({"v_u_mps", format_double(r.limits.v_u)});
        summary.row({"noise_floor_db", format_double(r.noise_floor_db)});
        summary.row({"noise_floor_linear_db", format_double(r.noise_floor_linear_db)});
        summary.row({"n_peaks", std::to_string(r.peaks.peaks.size())});
        summary.close();

        for (const char* name : {"map.csv", "map.bin", "range_profile.csv", "doppler_profile.csv", "peaks.csv",
                                 "trials.csv", "summary.csv"}) {
            files.push_back(dir / name);
        }
    }

    if (out.plots) {
        const double floor_db = r.peaks.noise_floor_db;
        auto to_db = [&](const std::vector<double>& lin) {
            std::vector<double> db(lin.size());
            for (std::size_t i = 0; i < lin.size(); ++i) {
                db[i] = 10.0 * std::log10(std::max(map.max_power > 0.0 ? lin[i] / map.max_power : 0.0, 1e-30));
            }
            return db;
        };
        const std::string tag = r.config.name + " (" + std::string(to_string(r.config.mode)) + ", L_c = " +
                                std::to_string(r.config.code.l_c) + ", L_s = " + std::to_string(r.config.code.l_s) +
                                ")";
        LinePlot range_plot;
        range_plot.title = "Range profile at " + format_double(map.velocity_at(r.profile_velocity_bin)) + " m/s, " + tag;
        range_plot.x_label = "range (m)";
        range_plot.y_label = "power (dB)";
        range_plot.x = range_axis;
        range_plot.y = to_db(range_cut);
        range_plot.y_min = profile_floor(floor_db);
        range_plot.y_max = 2.0;
        range_plot.reference_y = floor_db;
        range_plot.reference_label = "noise floor";
        write_line_plot_svg(range_plot, dir / "range_profile.svg");

        LinePlot doppler_plot = range_plot;
        doppler_plot.title = "Doppler profile at " + format_double(map.range_at(r.profile_range_bin)) + " m, " + tag;
        doppler_plot.x_label = "velocity (m/s)";
        doppler_plot.x = vel_axis;
        doppler_plot.y = to_db(vel_cut);
        write_line_plot_svg(doppler_plot, dir / "doppler_profile.svg");

        write_heatmap_svg(map, floor_db, "Range-Doppler map, " + tag, dir / "heatmap.svg");
        for (const char* name : {"range_profile.svg", "doppler_profile.svg", "heatmap.svg"}) {
            files.push_back(dir / name);
        }
    }

    if (out.report) {
        files.push_back(dir / "summary.json");
        files.push_back(dir / "config.yaml");
        std::vector<std::string> names;
        for (const auto& f : files) {
            names.push_back(f.filename().string());
        }
        save_config(r.config, dir / "config.yaml");
        std::ofstream js(dir / "summary.json", std::ios::binary | std::ios::trunc);
        js << summary_json(r, names).dump(2) << '\n';
        js.flush();
        if (!js) {
            throw std::runtime_error((dir / "summary.json").string() + ": write failed");
        }
    }
    return files;
}

std::string sweep_point_label(const SweepPoint& point) {
    return std::string(to_string(point.mode)) + "_L" + std::to_string(point.code.l()) + "_" +
           std::to_string(point.code.l_c) + "x" + std::to_string(point.code.l_s);
}

SweepReport run_sweep(const ExperimentConfig& base, const SweepConfig& sweep, bool write_outputs) {
    ExperimentConfig checked = base;
    checked.sweep.reset();
    checked.validate();
    const std::vector<SweepPoint> points = expand_sweep(checked, sweep);

    SweepReport report;
    report.points.resize(points.size());
    const std::filesystem::path root = base.output.directory;
    for (std::size_t i = 0; i < points.size(); ++i) {
        report.points[i].point = points[i];
        report.points[i].directory = root / sweep_point_label(points[i]);
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(points.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                ExperimentConfig cfg = apply_sweep_point(checked, points[i]);
                cfg.output.directory = report.points[i].directory.string();
                report.points[i].report = run_experiment(cfg, write_outputs);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t n_workers = std::min<std::size_t>(std::max<std::size_t>(base.workers, 1), points.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < n_workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    if (write_outputs) {
        prepare_directory(root);
        report.table = root / "sweep.csv";
        CsvWriter csv(report.table);
        csv.row({"mode", "l", "l_c", "l_s", "r_u_m", "v_u_mps", "noise_floor_db", "noise_floor_linear_db", "n_peaks",
                 "directory"});
        for (const SweepPointResult& p : report.points) {
            const ExperimentReport& r = p.report;
            csv.row({std::string(to_string(p.point.mode)), std::to_string(p.point.code.l()),
                     std::to_string(p.point.code.l_c), std::to_string(p.point.code.l_s), format_double(r.limits.r_u),
                     format_double(r.limits.v_u), format_double(r.noise_floor_db),
                     format_double(r.noise_floor_linear_db), std::to_string(r.peaks.peaks.size()),
                     p.directory.filename().string()});
        }
        csv.close();
    }
    return report;
}

}  // namespace pcsns
