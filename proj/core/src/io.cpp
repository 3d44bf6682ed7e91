#include "pcsns/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <system_error>

namespace pcsns {

namespace {

[[noreturn]] void io_error(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

std::ofstream open_out(const std::filesystem::path& path, bool binary) {
    std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
    if (!out) {
        io_error(path, "cannot open for writing");
    }
    return out;
}

std::ifstream open_in(const std::filesystem::path& path, bool binary) {
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) {
        io_error(path, "cannot open for reading");
    }
    return in;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        io_error(path, "write failed");
    }
}

void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> b{};
    for (std::size_t i = 0; i < 8; ++i) {
        b[i] = static_cast<char>((v >> (8 * i)) & 0xFFU);
    }
    out.write(b.data(), 8);
}

void put_u32(std::ostream& out, std::uint32_t v) {
    std::array<char, 4> b{};
    for (std::size_t i = 0; i < 4; ++i) {
        b[i] = static_cast<char>((v >> (8 * i)) & 0xFFU);
    }
    out.write(b.data(), 4);
}

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

std::uint64_t get_u64(std::istream& in, const std::filesystem::path& path) {
    std::array<unsigned char, 8> b{};
    if (!in.read(reinterpret_cast<char*>(b.data()), 8)) {
        io_error(path, "truncated file");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    }
    return v;
}

std::uint32_t get_u32(std::istream& in, const std::filesystem::path& path) {
    std::array<unsigned char, 4> b{};
    if (!in.read(reinterpret_cast<char*>(b.data()), 4)) {
        io_error(path, "truncated file");
    }
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    }
    return v;
}

double get_f64(std::istream& in, const std::filesystem::path& path) {
    return std::bit_cast<double>(get_u64(in, path));
}

void expect_magic(std::istream& in, const char (&magic)[8], const std::filesystem::path& path) {
    char got[8] = {};
    if (!in.read(got, 8) || std::memcmp(got, magic, 8) != 0) {
        io_error(path, "bad magic, expected " + std::string(magic, 8));
    }
}

std::size_t checked_dim(std::uint64_t v, const std::filesystem::path& path) {
    if (v == 0 || v > (std::uint64_t{1} << 32)) {
        io_error(path, "implausible dimension " + std::to_string(v));
    }
    return static_cast<std::size_t>(v);
}

double parse_double(const std::string& text, const std::filesystem::path& path) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        io_error(path, "not a number: '" + text + "'");
    }
    return v;
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double failed");
    }
    return std::string(buf.data(), ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path) : path_(path), out_(open_out(path, true)) {}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 0) {
            out_.put(',');
        }
        out_ << cells[i];
    }
    out_.put('\n');
}

void CsvWriter::close() {
    finish(out_, path_);
    out_.close();
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path) {
    std::ifstream in = open_in(path, true);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

void write_map_csv(const RangeDopplerMap& map, const std::filesystem::path& path) {
    std::ofstream out = open_out(path, true);
    out << "range_m";
    for (std::size_t c = 0; c < map.velocity_bins(); ++c) {
        out << ',' << format_double(map.velocity_at(c));
    }
    out << '\n';
    for (std::size_t r = 0; r < map.range_bins(); ++r) {
        out << format_double(map.range_at(r));
        for (std::size_t c = 0; c < map.velocity_bins(); ++c) {
            out << ',' << format_double(map.power(r, c));
        }
        out << '\n';
    }
    finish(out, path);
}

RangeDopplerMap read_map_csv(const std::filesystem::path& path) {
    const auto rows = read_csv(path);
    if (rows.size() < 2 || rows[0].size() < 2 || rows[0][0] != "range_m") {
        io_error(path, "not a range-Doppler map CSV");
    }
    const std::size_t nv = rows[0].size() - 1;
    const std::size_t nr = rows.size() - 1;
    RangeDopplerMap map;
    map.power = Grid<double>(nr, nv);
    std::vector<double> vel(nv);
    for (std::size_t c = 0; c < nv; ++c) {
        vel[c] = parse_double(rows[0][c + 1], path);
    }
    map.velocity_bin_mps = nv > 1 ? vel[1] - vel[0] : 0.0;
    map.zero_velocity_col = nv / 2;
    for (std::size_t r = 0; r < nr; ++r) {
        if (rows[r + 1].size() != nv + 1) {
            io_error(path, "row " + std::to_string(r + 2) + " has " + std::to_string(rows[r + 1].size()) +
                               " cells, expected " + std::to_string(nv + 1));
        }
        if (r == 1) {
            map.range_bin_m = parse_double(rows[2][0], path);
        }
        for (std::size_t c = 0; c < nv; ++c) {
            const double v = parse_double(rows[r + 1][c + 1], path);
            map.power(r, c) = v;
            map.max_power = std::max(map.max_power, v);
        }
    }
    return map;
}

void write_map_binary(const RangeDopplerMap& map, const std::filesystem::path& path) {
    std::ofstream out = open_out(path, true);
    out.write(kMapMagic, 8);
    put_u32(out, kMapFormatVersion);
    put_u64(out, map.range_bins());
    put_u64(out, map.velocity_bins());
    put_f64(out, map.range_bin_m);
    put_f64(out, map.velocity_bin_mps);
    put_u64(out, map.zero_velocity_col);
    for (std::size_t r = 0; r < map.range_bins(); ++r) {
        for (std::size_t c = 0; c < map.velocity_bins(); ++c) {
            put_f64(out, map.power(r, c));
        }
    }
    finish(out, path);
}

RangeDopplerMap read_map_binary(const std::filesystem::path& path) {
    std::ifstream in = open_in(path, true);
    expect_magic(in, kMapMagic, path);
    const std::uint32_t version = get_u32(in, path);
    if (version != kMapFormatVersion) {
        io_error(path, "unsupported map format version " + std::to_string(version));
    }
    const std::size_t nr = checked_dim(get_u64(in, path), path);
    const std::size_t nv = checked_dim(get_u64(in, path), path);
    RangeDopplerMap map;
    map.range_bin_m = get_f64(in, path);
    map.velocity_bin_mps = get_f64(in, path);
    map.zero_velocity_col = static_cast<std::size_t>(get_u64(in, path));
    map.power = Grid<double>(nr, nv);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nv; ++c) {
            const double v = get_f64(in, path);
            map.power(r, c) = v;
            map.max_power = std::max(map.max_power, v);
        }
    }
    return map;
}

void write_frame_binary(const SymbolMatrix& frame, const std::filesystem::path& path) {
    std::ofstream out = open_out(path, true);
    out.write(kFrameMagic, 8);
    put_u32(out, kFrameFormatVersion);
    put_u64(out, frame.rows());
    put_u64(out, frame.cols());
    for (std::size_t r = 0; r < frame.rows(); ++r) {
        for (std::size_t c = 0; c < frame.cols(); ++c) {
            put_f64(out, frame(r, c).real());
            put_f64(out, frame(r, c).imag());
        }
    }
    finish(out, path);
}

SymbolMatrix read_frame_binary(const std::filesystem::path& path) {
    std::ifstream in = open_in(path, true);
    expect_magic(in, kFrameMagic, path);
    const std::uint32_t version = get_u32(in, path);
    if (version != kFrameFormatVersion) {
        io_error(path, "unsupported frame format version " + std::to_string(version));
    }
    const std::size_t rows = checked_dim(get_u64(in, path), path);
    const std::size_t cols = checked_dim(get_u64(in, path), path);
    SymbolMatrix frame(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const double re = get_f64(in, path);
            const double im = get_f64(in, path);
            frame(r, c) = {re, im};
        }
    }
    return frame;
}

void write_profile_csv(const std::filesystem::path& path, std::string_view axis_name, const std::vector<double>& axis,
                       const std::vector<double>& power_linear, double reference_power) {
    if (axis.size() != power_linear.size()) {
        throw std::invalid_argument("write_profile_csv: axis and power lengths differ");
    }
    CsvWriter csv(path);
    csv.row({std::string(axis_name), "power_db", "power_linear"});
    for (std::size_t i = 0; i < axis.size(); ++i) {
        const double ratio = reference_power > 0.0 ? power_linear[i] / reference_power : 0.0;
        const double db = 10.0 * std::log10(std::max(ratio, 1e-30));
        csv.row({format_double(axis[i]), format_double(db), format_double(power_linear[i])});
    }
    csv.close();
}

void write_peaks_csv(const PeakReport& report, const std::filesystem::path& path) {
    CsvWriter csv(path);
    csv.row({"rank", "range_bin", "velocity_bin", "range_m", "velocity_mps", "power_db", "snr_db", "pslr_db"});
    for (std::size_t i = 0; i < report.peaks.size(); ++i) {
        const Peak& pk = report.peaks[i];
        csv.row({std::to_string(i + 1), std::to_string(pk.range_bin), std::to_string(pk.velocity_bin),
                 format_double(pk.range_m), format_double(pk.velocity_mps), format_double(pk.power_db),
                 format_double(pk.snr_db), format_double(pk.pslr_db)});
    }
    csv.close();
}

}  // namespace pcsns
