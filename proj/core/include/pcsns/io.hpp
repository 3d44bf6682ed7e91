#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "pcsns/matrix.hpp"
#include "pcsns/rdproc.hpp"

namespace pcsns {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

/**
 * Map CSV: header "range_m,<v_0>,<v_1>,..." lists the velocity axis (m/s),
 * then one row per range bin: range (m) followed by the linear powers.
 */
void write_map_csv(const RangeDopplerMap& map, const std::filesystem::path& path);
RangeDopplerMap read_map_csv(const std::filesystem::path& path);

/**
 * Binary map dump, all fields little-endian:
 *
 *   offset  size  field
 *   0       8     magic "PCSNSMAP"
 *   8       4     u32 format version (1)
 *   12      8     u64 rows (range bins)
 *   20      8     u64 cols (velocity bins)
 *   28      8     f64 range bin width (m)
 *   36      8     f64 velocity bin width (m/s)
 *   44      8     u64 zero-velocity column
 *   52      8*R*C f64 power, row-major (all velocities of range bin 0 first)
 */
inline constexpr char kMapMagic[8] = {'P', 'C', 'S', 'N', 'S', 'M', 'A', 'P'};
inline constexpr std::uint32_t kMapFormatVersion = 1;
void write_map_binary(const RangeDopplerMap& map, const std::filesystem::path& path);
RangeDopplerMap read_map_binary(const std::filesystem::path& path);

/**
 * Binary frame dump with the same layout conventions:
 * magic "PCSNSFRM", u32 version (1), u64 rows, u64 cols, then rows*cols
 * (re, im) f64 pairs in row-major order.
 */
inline constexpr char kFrameMagic[8] = {'P', 'C', 'S', 'N', 'S', 'F', 'R', 'M'};
inline constexpr std::uint32_t kFrameFormatVersion = 1;
void write_frame_binary(const SymbolMatrix& frame, const std::filesystem::path& path);
SymbolMatrix read_frame_binary(const std::filesystem::path& path);

/// Profile CSV: "<axis_name>,power_db,power_linear".
void write_profile_csv(const std::filesystem::path& path, std::string_view axis_name, const std::vector<double>& axis,
                       const std::vector<double>& power_linear, double reference_power);

/// Peaks CSV: rank, bins, physical position, power, SNR and PSLR of every detected peak.
void write_peaks_csv(const PeakReport& report, const std::filesystem::path& path);

/// Minimal CSV table writer (no quoting needed for the numeric tables emitted here).
class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path);

    void row(const std::vector<std::string>& cells);
    /// Flushes and closes; throws std::runtime_error if any write failed.
    void close();

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

/// Reads a CSV file into rows of cells. Throws std::runtime_error on I/O failure.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path);

}  // namespace pcsns
