#pragma once

#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "pcsns/rdproc.hpp"

namespace pcsns {

struct LinePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> x;
    std::vector<double> y;
    double y_min = -60.0;
    double y_max = 0.0;
    /// Optional horizontal reference line (e.g. the noise floor); NaN to omit.
    double reference_y = std::numeric_limits<double>::quiet_NaN();
    std::string reference_label;
};

/// Standalone SVG line chart. Values below y_min are clipped to the axis.
void write_line_plot_svg(const LinePlot& plot, const std::filesystem::path& path);

/**
 * Standalone SVG heatmap of a range-Doppler map in dB relative to its
 * maximum. Large maps are max-pooled to at most 256 x 128 cells (range x
 * velocity) so every peak survives. Colours span [floor_db - 5, 0] dB;
 * values below the bottom saturate.
 */
void write_heatmap_svg(const RangeDopplerMap& map, double floor_db, const std::string& title,
                       const std::filesystem::path& path);

}  // namespace pcsns
