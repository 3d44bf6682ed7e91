// pcsns: command-line harness for the sub-Nyquist OFDM radar simulator.
//
// Exit codes: 0 ok, 1 configuration or usage error, 2 runtime error.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pcsns/config.hpp"
#include "pcsns/experiment.hpp"
#include "pcsns/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

struct Overrides {
    std::string output;
    std::size_t trials = 0;
    std::size_t workers = 0;
};

pcsns::ExperimentConfig load(const std::string& source, const Overrides& o) {
    pcsns::ExperimentConfig cfg = pcsns::load_config_or_preset(source);
    if (!o.output.empty()) {
        cfg.output.directory = o.output;
    }
    if (o.trials != 0) {
        cfg.trials = o.trials;
    }
    if (o.workers != 0) {
        cfg.workers = o.workers;
    }
    cfg.validate();
    return cfg;
}

std::string code_label(const pcsns::ExperimentConfig& cfg) {
    return std::string(pcsns::to_string(cfg.mode)) + " L_c=" + std::to_string(cfg.code.l_c) +
           " L_s=" + std::to_string(cfg.code.l_s);
}

void print_report(const pcsns::ExperimentReport& r) {
    using pcsns::format_double;
    std::cout << r.config.name << " [" << code_label(r.config) << "]\n"
              << "  r_u = " << format_double(r.limits.r_u) << " m, v_u = +/-" << format_double(r.limits.v_u)
              << " m/s\n"
              << "  noise floor = " << format_double(r.noise_floor_db) << " dB (mean of " << r.trials.size()
              << " trials), peaks above " << format_double(r.peaks.detection_threshold_db)
              << " dB = " << r.peaks.peaks.size() << "\n";
    const std::size_t shown = std::min<std::size_t>(r.peaks.peaks.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) {
        const pcsns::Peak& pk = r.peaks.peaks[i];
        char line[160];
        std::snprintf(line, sizeof line, "  #%-3zu range %8.3f m  velocity %9.3f m/s  %7.2f dB\n", i + 1, pk.range_m,
                      pk.velocity_mps, pk.power_db);
        std::cout << line;
    }
    if (shown < r.peaks.peaks.size()) {
        std::cout << "  ... " << (r.peaks.peaks.size() - shown) << " more in peaks.csv\n";
    }
    if (!r.files.empty()) {
        std::cout << "  wrote " << r.files.size() << " files to " << r.config.output.directory << "\n";
    }
}

int guarded(const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const pcsns::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sub-Nyquist OFDM radar simulator (full, sns, pc-sns)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "pcsns 0.1.0");

    Overrides overrides;
    std::string source;

    auto* run = app.add_subcommand("run", "Run one experiment from a YAML config or preset name");
    run->add_option("config", source, "Config file or preset name")->required();
    run->add_option("-o,--output", overrides.output, "Override output.directory");
    run->add_option("--trials", overrides.trials, "Override the number of noise trials")->check(CLI::Range(1, 1000));

    std::string over;
    std::string modes;
    auto* sweep = app.add_subcommand("sweep", "Run a sweep over L or (L_c, L_s)");
    sweep->add_option("config", source, "Config file or preset name")->required();
    sweep->add_option("--over", over, "Sweep axis: L=2,4,8,16 or codes=16x1,4x4,1x16 (default: the config's sweep)");
    sweep->add_option("--modes", modes, "Comma-separated modes to sweep, e.g. sns,pc-sns (default: the config's)");
    sweep->add_option("-o,--output", overrides.output, "Override output.directory");
    sweep->add_option("--trials", overrides.trials, "Override the number of noise trials")->check(CLI::Range(1, 1000));
    sweep->add_option("-j,--workers", overrides.workers, "Parallel sweep points")->check(CLI::Range(1, 256));

    std::string emit_name;
    auto* presets = app.add_subcommand("presets", "List built-in presets");
    presets->add_option("--emit", emit_name, "Print the named preset as YAML");

    auto* validate = app.add_subcommand("validate", "Check a config without running it");
    validate->add_option("config", source, "Config file or preset name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (*presets) {
        return guarded([&] {
            if (!emit_name.empty()) {
                std::cout << pcsns::emit_config(pcsns::preset(emit_name));
                return;
            }
            for (const auto& p : pcsns::list_presets()) {
                std::printf("%-14s %s\n", p.name.c_str(), p.description.c_str());
            }
        });
    }
    if (*validate) {
        return guarded([&] {
            const pcsns::ExperimentConfig cfg = load(source, overrides);
            std::cout << "ok: " << cfg.name << " [" << code_label(cfg) << "], " << cfg.params.n_subcarriers << " x "
                      << cfg.params.n_symbols << ", " << cfg.scenario.targets.size() << " target(s), " << cfg.trials
                      << " trial(s)\n";
        });
    }
    if (*run) {
        return guarded([&] { print_report(pcsns::run_experiment(load(source, overrides))); });
    }
    if (*sweep) {
        return guarded([&] {
            const pcsns::ExperimentConfig cfg = load(source, overrides);
            pcsns::SweepConfig axis;
            if (!over.empty()) {
                axis = pcsns::parse_sweep_axis(over);
                if (cfg.sweep) {
                    axis.modes = cfg.sweep->modes;
                }
            } else if (cfg.sweep) {
                axis = *cfg.sweep;
            } else {
                throw pcsns::ConfigError("--over", "no sweep axis given and the config has no sweep section");
            }
            if (!modes.empty()) {
                axis.modes.clear();
                std::size_t start = 0;
                while (start <= modes.size()) {
                    const std::size_t comma = modes.find(',', start);
                    const std::string item = modes.substr(start, comma == std::string::npos ? std::string::npos
                                                                                             : comma - start);
                    try {
                        axis.modes.push_back(pcsns::parse_mode(item));
                    } catch (const std::invalid_argument& e) {
                        throw pcsns::ConfigError("--modes", e.what());
                    }
                    if (comma == std::string::npos) {
                        break;
                    }
                    start = comma + 1;
                }
            }
            const pcsns::SweepReport report = pcsns::run_sweep(cfg, axis);
            std::printf("%-8s %4s %4s %4s %10s %10s %14s %7s\n", "mode", "L", "L_c", "L_s", "r_u (m)", "v_u (m/s)",
                        "floor (dB)", "peaks");
            for (const auto& p : report.points) {
                std::printf("%-8s %4zu %4zu %4zu %10.3f %10.3f %14.3f %7zu\n",
                            std::string(pcsns::to_string(p.point.mode)).c_str(), p.point.code.l(), p.point.code.l_c,
                            p.point.code.l_s, p.report.limits.r_u, p.report.limits.v_u, p.report.noise_floor_db,
                            p.report.peaks.peaks.size());
            }
            if (!report.table.empty()) {
                std::cout << "wrote " << report.table.string() << "\n";
            }
        });
    }
    return kExitConfig;
}
