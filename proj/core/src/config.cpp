#include "pcsns/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pcsns/io.hpp"

namespace pcsns {

namespace {

std::string join_path(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

void require_map(const YAML::Node& node, const std::string& path, std::initializer_list<std::string_view> keys) {
    if (!node.IsMap()) {
        throw ConfigError(path, "expected a mapping");
    }
    for (const auto& kv : node) {
        const std::string key = kv.first.as<std::string>();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw ConfigError(join_path(path, key), "unknown key");
        }
    }
}

std::string scalar_text(const YAML::Node& node, const std::string& path) {
    if (!node.IsScalar()) {
        throw ConfigError(path, "expected a scalar value");
    }
    return node.Scalar();
}

double read_double(const YAML::Node& node, const std::string& path) {
    const std::string text = scalar_text(node, path);
    try {
        return node.as<double>();
    } catch (const YAML::Exception&) {
        throw ConfigError(path, "expected a number, got '" + text + "'");
    }
}

std::uint64_t read_u64(const YAML::Node& node, const std::string& path) {
    const std::string text = scalar_text(node, path);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError(path, "expected a non-negative integer, got '" + text + "'");
    }
    return v;
}

std::size_t read_size(const YAML::Node& node, const std::string& path) {
    return static_cast<std::size_t>(read_u64(node, path));
}

bool read_bool(const YAML::Node& node, const std::string& path) {
    const std::string text = scalar_text(node, path);
    try {
        return node.as<bool>();
    } catch (const YAML::Exception&) {
        throw ConfigError(path, "expected true or false, got '" + text + "'");
    }
}

template <typename F>
auto read_enum(const YAML::Node& node, const std::string& path, F parse) {
    const std::string text = scalar_text(node, path);
    try {
        return parse(text);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path, e.what());
    }
}

CodeConfig parse_code_text(std::string_view text, const std::string& path) {
    const std::size_t x = text.find('x');
    auto parse_part = [&](std::string_view part) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || v == 0) {
            throw ConfigError(path, "expected L_cxL_s such as 4x4, got '" + std::string(text) + "'");
        }
        return v;
    };
    if (x == std::string_view::npos) {
        throw ConfigError(path, "expected L_cxL_s such as 4x4, got '" + std::string(text) + "'");
    }
    return CodeConfig{parse_part(text.substr(0, x)), parse_part(text.substr(x + 1))};
}

std::string code_text(const CodeConfig& code) { return std::to_string(code.l_c) + "x" + std::to_string(code.l_s); }

template <typename T, typename F>
std::vector<T> read_list(const YAML::Node& node, const std::string& path, F read_item) {
    if (!node.IsSequence()) {
        throw ConfigError(path, "expected a list");
    }
    std::vector<T> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        out.push_back(read_item(node[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

void parse_params(const YAML::Node& node, ExperimentConfig& cfg) {
    const std::string p = "params";
    require_map(node, p,
                {"n_subcarriers", "n_symbols", "subcarrier_spacing", "carrier_freq", "cp_duration", "speed_of_light"});
    if (node["n_subcarriers"]) cfg.params.n_subcarriers = read_size(node["n_subcarriers"], p + ".n_subcarriers");
    if (node["n_symbols"]) cfg.params.n_symbols = read_size(node["n_symbols"], p + ".n_symbols");
    if (node["subcarrier_spacing"]) cfg.params.subcarrier_spacing = read_double(node["subcarrier_spacing"], p + ".subcarrier_spacing");
    if (node["carrier_freq"]) cfg.params.carrier_freq = read_double(node["carrier_freq"], p + ".carrier_freq");
    if (node["cp_duration"]) cfg.params.cp_duration = read_double(node["cp_duration"], p + ".cp_duration");
    if (node["speed_of_light"]) cfg.speed_of_light = read_double(node["speed_of_light"], p + ".speed_of_light");
}

Target parse_target(const YAML::Node& node, const std::string& path) {
    require_map(node, path, {"range", "velocity", "amplitude"});
    Target t;
    if (!node["range"]) {
        throw ConfigError(path + ".range", "missing");
    }
    t.range = read_double(node["range"], path + ".range");
    if (node["velocity"]) t.velocity = read_double(node["velocity"], path + ".velocity");
    if (node["amplitude"]) {
        const YAML::Node a = node["amplitude"];
        const std::string ap = path + ".amplitude";
        if (a.IsScalar()) {
            t.amplitude = {read_double(a, ap), 0.0};
        } else if (a.IsSequence() && a.size() == 2) {
            t.amplitude = {read_double(a[0], ap + "[0]"), read_double(a[1], ap + "[1]")};
        } else {
            throw ConfigError(ap, "expected a real number or [re, im]");
        }
    }
    return t;
}

void parse_scenario(const YAML::Node& node, ExperimentConfig& cfg) {
    const std::string p = "scenario";
    require_map(node, p, {"noise_power", "noise_seed", "targets"});
    if (node["noise_power"]) cfg.scenario.noise_power = read_double(node["noise_power"], p + ".noise_power");
    if (node["noise_seed"]) cfg.scenario.noise_seed = read_u64(node["noise_seed"], p + ".noise_seed");
    if (node["targets"]) cfg.scenario.targets = read_list<Target>(node["targets"], p + ".targets", parse_target);
}

SweepConfig parse_sweep(const YAML::Node& node) {
    const std::string p = "sweep";
    require_map(node, p, {"l_values", "codes", "modes"});
    SweepConfig s;
    if (node["l_values"]) s.l_values = read_list<std::size_t>(node["l_values"], p + ".l_values", read_size);
    if (node["codes"]) {
        s.codes = read_list<CodeConfig>(node["codes"], p + ".codes", [](const YAML::Node& n, const std::string& path) {
            return parse_code_text(scalar_text(n, path), path);
        });
    }
    if (node["modes"]) {
        s.modes = read_list<Mode>(node["modes"], p + ".modes", [](const YAML::Node& n, const std::string& path) {
            return read_enum(n, path, parse_mode);
        });
    }
    return s;
}

ExperimentConfig from_yaml(const YAML::Node& root) {
    ExperimentConfig cfg;
    require_map(root, "",
                {"schema_version", "name", "params", "code", "mode", "waveform", "scenario", "processing", "trials",
                 "workers", "output", "sweep"});
    if (!root["schema_version"]) {
        throw ConfigError("schema_version", "missing (current version is " + std::to_string(kSchemaVersion) + ")");
    }
    cfg.schema_version = static_cast<int>(read_u64(root["schema_version"], "schema_version"));
    if (cfg.schema_version != kSchemaVersion) {
        throw ConfigError("schema_version", "unsupported version " + std::to_string(cfg.schema_version) +
                                                " (expected " + std::to_string(kSchemaVersion) + ")");
    }
    if (root["name"]) cfg.name = scalar_text(root["name"], "name");
    if (root["params"]) parse_params(root["params"], cfg);
    if (const YAML::Node n = root["code"]) {
        require_map(n, "code", {"l_c", "l_s"});
        if (n["l_c"]) cfg.code.l_c = read_size(n["l_c"], "code.l_c");
        if (n["l_s"]) cfg.code.l_s = read_size(n["l_s"], "code.l_s");
    }
    if (root["mode"]) cfg.mode = read_enum(root["mode"], "mode", parse_mode);
    if (const YAML::Node n = root["waveform"]) {
        require_map(n, "waveform", {"constellation", "symbol_seed"});
        if (n["constellation"]) cfg.waveform.constellation = read_enum(n["constellation"], "waveform.constellation", parse_constellation);
        if (n["symbol_seed"]) cfg.waveform.symbol_seed = read_u64(n["symbol_seed"], "waveform.symbol_seed");
    }
    if (root["scenario"]) parse_scenario(root["scenario"], cfg);
    if (const YAML::Node n = root["processing"]) {
        require_map(n, "processing", {"window", "threshold_db", "guard"});
        if (n["window"]) cfg.processing.window = read_enum(n["window"], "processing.window", parse_window);
        if (n["threshold_db"]) cfg.processing.threshold_db = read_double(n["threshold_db"], "processing.threshold_db");
        if (n["guard"]) cfg.processing.guard = read_size(n["guard"], "processing.guard");
    }
    if (root["trials"]) cfg.trials = read_size(root["trials"], "trials");
    if (root["workers"]) cfg.workers = read_size(root["workers"], "workers");
    if (const YAML::Node n = root["output"]) {
        require_map(n, "output", {"directory", "csv", "plots", "report"});
        if (n["directory"]) cfg.output.directory = scalar_text(n["directory"], "output.directory");
        if (n["csv"]) cfg.output.csv = read_bool(n["csv"], "output.csv");
        if (n["plots"]) cfg.output.plots = read_bool(n["plots"], "output.plots");
        if (n["report"]) cfg.output.report = read_bool(n["report"], "output.report");
    }
    if (root["sweep"]) cfg.sweep = parse_sweep(root["sweep"]);
    return cfg;
}

void check_positive(double v, const std::string& path) {
    if (!std::isfinite(v) || !(v > 0.0)) {
        throw ConfigError(path, "must be a finite positive number");
    }
}

}  // namespace

void ExperimentConfig::validate() const {
    if (schema_version != kSchemaVersion) {
        throw ConfigError("schema_version", "unsupported version " + std::to_string(schema_version));
    }
    if (name.empty()) {
        throw ConfigError("name", "must not be empty");
    }
    if (params.n_subcarriers < 2) {
        throw ConfigError("params.n_subcarriers", "must be >= 2");
    }
    if (params.n_symbols < 1) {
        throw ConfigError("params.n_symbols", "must be >= 1");
    }
    check_positive(params.subcarrier_spacing, "params.subcarrier_spacing");
    check_positive(params.carrier_freq, "params.carrier_freq");
    if (!std::isfinite(params.cp_duration) || params.cp_duration < 0.0) {
        throw ConfigError("params.cp_duration", "must be a finite number >= 0");
    }
    check_positive(speed_of_light, "params.speed_of_light");
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("params", e.what());
    }

    if (code.l_c < 1) {
        throw ConfigError("code.l_c", "must be >= 1");
    }
    if (code.l_s < 1) {
        throw ConfigError("code.l_s", "must be >= 1");
    }
    if (params.n_subcarriers % code.l() != 0) {
        throw ConfigError("code", "L = l_c * l_s = " + std::to_string(code.l()) + " must divide n_subcarriers = " +
                                      std::to_string(params.n_subcarriers));
    }
    if (params.n_symbols % code.l_s != 0) {
        throw ConfigError("code.l_s", "must divide n_symbols = " + std::to_string(params.n_symbols));
    }
    if (mode == Mode::full && code.l() != 1) {
        throw ConfigError("mode", "full mode requires code.l_c = code.l_s = 1");
    }

    for (std::size_t i = 0; i < scenario.targets.size(); ++i) {
        const Target& t = scenario.targets[i];
        const std::string p = "scenario.targets[" + std::to_string(i) + "]";
        if (!std::isfinite(t.range) || t.range < 0.0) {
            throw ConfigError(p + ".range", "must be a finite number >= 0");
        }
        if (!std::isfinite(t.velocity)) {
            throw ConfigError(p + ".velocity", "must be finite");
        }
        if (!std::isfinite(t.amplitude.real()) || !std::isfinite(t.amplitude.imag()) || std::abs(t.amplitude) == 0.0) {
            throw ConfigError(p + ".amplitude", "must be finite and nonzero");
        }
    }
    if (!std::isfinite(scenario.noise_power) || scenario.noise_power < 0.0) {
        throw ConfigError("scenario.noise_power", "must be a finite number >= 0");
    }

    if (!std::isfinite(processing.threshold_db) || !(processing.threshold_db < 0.0)) {
        throw ConfigError("processing.threshold_db", "must be negative (dB relative to the map maximum)");
    }
    if (2 * processing.guard + 1 > params.n_subcarriers) {
        throw ConfigError("processing.guard", "guard box is wider than the range axis");
    }
    if (trials < 1 || trials > 1000) {
        throw ConfigError("trials", "must be between 1 and 1000");
    }
    if (workers < 1 || workers > 256) {
        throw ConfigError("workers", "must be between 1 and 256");
    }
    if (output.directory.empty()) {
        throw ConfigError("output.directory", "must not be empty");
    }
    if (sweep) {
        expand_sweep(*this, *sweep);
    }
}

ExperimentConfig parse_config(std::string_view yaml_text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(yaml_text));
    } catch (const YAML::ParserException& e) {
        throw ConfigError("", std::string("YAML syntax error: ") + e.what());
    }
    if (!root || root.IsNull()) {
        throw ConfigError("", "empty configuration");
    }
    ExperimentConfig cfg = from_yaml(root);
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("", "cannot read config file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string emit_config(const ExperimentConfig& cfg) {
    YAML::Emitter out;
    auto num = [](double v) { return format_double(v); };
    out << YAML::BeginMap;
    out << YAML::Key << "schema_version" << YAML::Value << cfg.schema_version;
    out << YAML::Key << "name" << YAML::Value << cfg.name;

    out << YAML::Key << "params" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "n_subcarriers" << YAML::Value << cfg.params.n_subcarriers;
    out << YAML::Key << "n_symbols" << YAML::Value << cfg.params.n_symbols;
    out << YAML::Key << "subcarrier_spacing" << YAML::Value << num(cfg.params.subcarrier_spacing);
    out << YAML::Key << "carrier_freq" << YAML::Value << num(cfg.params.carrier_freq);
    out << YAML::Key << "cp_duration" << YAML::Value << num(cfg.params.cp_duration);
    out << YAML::Key << "speed_of_light" << YAML::Value << num(cfg.speed_of_light);
    out << YAML::EndMap;

    out << YAML::Key << "code" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "l_c" << YAML::Value << cfg.code.l_c;
    out << YAML::Key << "l_s" << YAML::Value << cfg.code.l_s;
    out << YAML::EndMap;
    out << YAML::Key << "mode" << YAML::Value << std::string(to_string(cfg.mode));

    out << YAML::Key << "waveform" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "constellation" << YAML::Value << std::string(to_string(cfg.waveform.constellation));
    out << YAML::Key << "symbol_seed" << YAML::Value << cfg.waveform.symbol_seed;
    out << YAML::EndMap;

    out << YAML::Key << "scenario" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "noise_power" << YAML::Value << num(cfg.scenario.noise_power);
    out << YAML::Key << "noise_seed" << YAML::Value << cfg.scenario.noise_seed;
    out << YAML::Key << "targets" << YAML::Value << YAML::BeginSeq;
    for (const Target& t : cfg.scenario.targets) {
        out << YAML::BeginMap;
        out << YAML::Key << "range" << YAML::Value << num(t.range);
        out << YAML::Key << "velocity" << YAML::Value << num(t.velocity);
        out << YAML::Key << "amplitude" << YAML::Value << YAML::Flow << YAML::BeginSeq << num(t.amplitude.real())
            << num(t.amplitude.imag()) << YAML::EndSeq;
        out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::EndMap;

    out << YAML::Key << "processing" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "window" << YAML::Value << std::string(to_string(cfg.processing.window));
    out << YAML::Key << "threshold_db" << YAML::Value << num(cfg.processing.threshold_db);
    out << YAML::Key << "guard" << YAML::Value << cfg.processing.guard;
    out << YAML::EndMap;

    out << YAML::Key << "trials" << YAML::Value << cfg.trials;
    out << YAML::Key << "workers" << YAML::Value << cfg.workers;

    out << YAML::Key << "output" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "directory" << YAML::Value << YAML::DoubleQuoted << cfg.output.directory;
    out << YAML::Key << "csv" << YAML::Value << cfg.output.csv;
    out << YAML::Key << "plots" << YAML::Value << cfg.output.plots;
    out << YAML::Key << "report" << YAML::Value << cfg.output.report;
    out << YAML::EndMap;

    if (cfg.sweep) {
        out << YAML::Key << "sweep" << YAML::Value << YAML::BeginMap;
        if (!cfg.sweep->l_values.empty()) {
            out << YAML::Key << "l_values" << YAML::Value << YAML::Flow << cfg.sweep->l_values;
        }
        if (!cfg.sweep->codes.empty()) {
            out << YAML::Key << "codes" << YAML::Value << YAML::Flow << YAML::BeginSeq;
            for (const CodeConfig& c : cfg.sweep->codes) {
                out << code_text(c);
            }
            out << YAML::EndSeq;
        }
        if (!cfg.sweep->modes.empty()) {
            out << YAML::Key << "modes" << YAML::Value << YAML::Flow << YAML::BeginSeq;
            for (Mode m : cfg.sweep->modes) {
                out << std::string(to_string(m));
            }
            out << YAML::EndSeq;
        }
        out << YAML::EndMap;
    }
    out << YAML::EndMap;
    if (!out.good()) {
        throw std::runtime_error(std::string("emit_config: ") + out.GetLastError());
    }
    return std::string(out.c_str()) + "\n";
}

void save_config(const ExperimentConfig& cfg, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << emit_config(cfg);
    out.flush();
    if (!out) {
        throw std::runtime_error(path.string() + ": write failed");
    }
}

SweepConfig parse_sweep_axis(std::string_view text) {
    const std::size_t eq = text.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError("--over", "expected L=... or codes=..., got '" + std::string(text) + "'");
    }
    const std::string_view key = text.substr(0, eq);
    std::string_view rest = text.substr(eq + 1);
    std::vector<std::string_view> items;
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        items.push_back(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (items.empty()) {
        throw ConfigError("--over", "empty sweep list");
    }
    SweepConfig s;
    for (std::string_view item : items) {
        if (key == "L" || key == "l") {
            std::size_t v = 0;
            const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
            if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || v == 0) {
                throw ConfigError("--over", "expected a positive integer L, got '" + std::string(item) + "'");
            }
            s.l_values.push_back(v);
        } else if (key == "codes") {
            s.codes.push_back(parse_code_text(item, "--over"));
        } else {
            throw ConfigError("--over", "unknown sweep axis '" + std::string(key) + "' (expected L or codes)");
        }
    }
    return s;
}

std::vector<SweepPoint> expand_sweep(const ExperimentConfig& base, const SweepConfig& sweep) {
    if (sweep.l_values.empty() && sweep.codes.empty()) {
        throw ConfigError("sweep", "empty sweep list");
    }
    if (!sweep.l_values.empty() && !sweep.codes.empty()) {
        throw ConfigError("sweep", "give either l_values or codes, not both");
    }
    std::vector<Mode> modes = sweep.modes.empty() ? std::vector<Mode>{base.mode} : sweep.modes;
    if (std::all_of(modes.begin(), modes.end(), [](Mode m) { return m == Mode::full; })) {
        throw ConfigError(sweep.modes.empty() ? "mode" : "sweep.modes",
                          "full mode has a single point (L = 1); sweep sns and/or pc-sns");
    }
    std::vector<SweepPoint> points;
    auto add = [&](const SweepPoint& pt) {
        if (std::find(points.begin(), points.end(), pt) == points.end()) {
            points.push_back(pt);
        }
    };
    for (Mode mode : modes) {
        if (mode == Mode::full) {
            add({Mode::full, CodeConfig{1, 1}});
            continue;
        }
        for (std::size_t i = 0; i < sweep.l_values.size(); ++i) {
            const std::size_t l = sweep.l_values[i];
            const std::size_t ls = base.code.l_s;
            if (l % ls != 0) {
                throw ConfigError("sweep.l_values[" + std::to_string(i) + "]",
                                  "L = " + std::to_string(l) + " is not a multiple of code.l_s = " + std::to_string(ls));
            }
            add({mode, CodeConfig{l / ls, ls}});
        }
        for (const CodeConfig& c : sweep.codes) {
            add({mode, c});
        }
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        ExperimentConfig point_cfg = apply_sweep_point(base, points[i]);
        point_cfg.sweep.reset();
        try {
            point_cfg.validate();
        } catch (const ConfigError& e) {
            throw ConfigError("sweep", "point " + std::string(to_string(points[i].mode)) + " " +
                                           code_text(points[i].code) + " is invalid: " + e.what());
        }
    }
    return points;
}

ExperimentConfig apply_sweep_point(const ExperimentConfig& base, const SweepPoint& point) {
    ExperimentConfig cfg = base;
    cfg.mode = point.mode;
    cfg.code = point.code;
    return cfg;
}

namespace {

ExperimentConfig make_table1() {
    ExperimentConfig cfg;
    cfg.name = "table1-sim";
    cfg.params = table1_params();
    cfg.speed_of_light = 3e8;
    cfg.mode = Mode::full;
    cfg.code = {1, 1};
    cfg.waveform = {Constellation::qpsk, 1};
    cfg.scenario.targets = {Target{16.0, 10.0, {1.0, 0.0}}};
    cfg.scenario.noise_power = std::pow(10.0, -0.8);
    cfg.scenario.noise_seed = 1001;
    cfg.trials = 5;
    cfg.output.directory = "out/table1-sim";
    return cfg;
}

ExperimentConfig make_fig7() {
    ExperimentConfig cfg = make_table1();
    cfg.name = "fig7-scenario";
    cfg.mode = Mode::pc_sns;
    cfg.code = {4, 4};
    cfg.output.directory = "out/fig7-scenario";
    cfg.sweep = SweepConfig{{}, {CodeConfig{4, 4}}, {Mode::sns, Mode::pc_sns}};
    return cfg;
}

ExperimentConfig make_lsweep() {
    ExperimentConfig cfg;
    cfg.name = "lsweep-sim";
    cfg.params = lsweep_params();
    cfg.speed_of_light = 3e8;
    cfg.mode = Mode::pc_sns;
    cfg.code = {2, 1};
    cfg.waveform = {Constellation::qpsk, 1};
    cfg.scenario.targets = {Target{2.5, 0.0, {1.0, 0.0}}, Target{5.3, 0.0, {1.0, 0.0}}, Target{9.9, 0.0, {1.0, 0.0}}};
    cfg.scenario.noise_power = std::pow(10.0, -0.8);
    cfg.scenario.noise_seed = 1001;
    cfg.trials = 5;
    cfg.output.directory = "out/lsweep-sim";
    cfg.sweep = SweepConfig{{2, 4, 8, 16}, {}, {Mode::full, Mode::sns, Mode::pc_sns}};
    return cfg;
}

}  // namespace

std::vector<PresetInfo> list_presets() {
    return {
        {"table1-sim", "full-rate OFDM radar, 2048 x 256 numerology, one target at 16 m / 10 m/s, 5 noise trials"},
        {"fig7-scenario", "same scene with PC-SNS, L_c = L_s = 4 (sweep compares against SNS at L = 16)"},
        {"lsweep-sim", "2048 x 10 numerology, targets at 2.5 / 5.3 / 9.9 m, sweep L = 2, 4, 8, 16 over full, sns, pc-sns"},
    };
}

bool is_preset(std::string_view name) {
    const auto all = list_presets();
    return std::any_of(all.begin(), all.end(), [&](const PresetInfo& p) { return p.name == name; });
}

ExperimentConfig preset(std::string_view name) {
    if (name == "table1-sim") {
        return make_table1();
    }
    if (name == "fig7-scenario") {
        return make_fig7();
    }
    if (name == "lsweep-sim") {
        return make_lsweep();
    }
    throw ConfigError("", "unknown preset '" + std::string(name) + "'");
}

ExperimentConfig load_config_or_preset(std::string_view name_or_path) {
    const std::filesystem::path path{std::string(name_or_path)};
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec)) {
        return load_config(path);
    }
    if (is_preset(name_or_path)) {
        return preset(name_or_path);
    }
    throw ConfigError("", "no config file or preset named '" + std::string(name_or_path) + "'");
}

}  // namespace pcsns
