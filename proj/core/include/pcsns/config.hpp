#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcsns/channel.hpp"
#include "pcsns/params.hpp"
#include "pcsns/rdproc.hpp"
#include "pcsns/receiver.hpp"
#include "pcsns/waveform.hpp"

namespace pcsns {

inline constexpr int kSchemaVersion = 1;

/// Invalid configuration. field() is the dotted path of the offending key (e.g. "code.l_c").
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct WaveformConfig {
    Constellation constellation = Constellation::qpsk;
    std::uint64_t symbol_seed = 1;
    bool operator==(const WaveformConfig&) const = default;
};

struct ProcessingConfig {
    Window window = Window::none;
    double threshold_db = kDefaultThresholdDb;
    std::size_t guard = kDefaultGuardBins;
    bool operator==(const ProcessingConfig&) const = default;
};

struct OutputConfig {
    std::string directory = "out";
    bool csv = true;
    bool plots = true;
    bool report = true;
    bool operator==(const OutputConfig&) const = default;
};

/// One point of a sweep: a mode and its code factorization.
struct SweepPoint {
    Mode mode = Mode::pc_sns;
    CodeConfig code;
    bool operator==(const SweepPoint&) const = default;
};

/**
 * Sweep axis. Either l_values (each L keeps the base L_s and sets
 * L_c = L / L_s) or codes (explicit (L_c, L_s) pairs), crossed with modes.
 * A full-mode entry contributes a single L = 1 reference point.
 */
struct SweepConfig {
    std::vector<std::size_t> l_values;
    std::vector<CodeConfig> codes;
    std::vector<Mode> modes;
    bool operator==(const SweepConfig&) const = default;
};

struct ExperimentConfig {
    int schema_version = kSchemaVersion;
    std::string name = "experiment";
    RadarParams params;
    double speed_of_light = kSpeedOfLight;
    CodeConfig code;
    Mode mode = Mode::full;
    WaveformConfig waveform;
    TargetScenario scenario;
    ProcessingConfig processing;
    std::size_t trials = 1;
    std::size_t workers = 1;
    OutputConfig output;
    std::optional<SweepConfig> sweep;

    /// Throws ConfigError naming the first invalid field.
    void validate() const;
    bool operator==(const ExperimentConfig&) const = default;
};

/// Parses YAML text. Unknown keys are rejected. Missing keys take the defaults above.
ExperimentConfig parse_config(std::string_view yaml_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// YAML text with every field spelled out; doubles are written with round-trip precision.
std::string emit_config(const ExperimentConfig& cfg);
void save_config(const ExperimentConfig& cfg, const std::filesystem::path& path);

/// Parses a CLI sweep axis such as "L=2,4,8,16" or "codes=16x1,4x4,1x16".
SweepConfig parse_sweep_axis(std::string_view text);

/// Expands a sweep into concrete points, validating each against the base config.
std::vector<SweepPoint> expand_sweep(const ExperimentConfig& base, const SweepConfig& sweep);

/// The base config with mode and code replaced by the point's.
ExperimentConfig apply_sweep_point(const ExperimentConfig& base, const SweepPoint& point);

struct PresetInfo {
    std::string name;
    std::string description;
};

std::vector<PresetInfo> list_presets();
/// Throws ConfigError for unknown names.
ExperimentConfig preset(std::string_view name);
bool is_preset(std::string_view name);

/// Either a preset name or a path to a YAML file.
ExperimentConfig load_config_or_preset(std::string_view name_or_path);

}  // namespace pcsns
