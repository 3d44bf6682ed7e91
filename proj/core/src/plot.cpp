#include "pcsns/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pcsns {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;
constexpr std::size_t kMaxRangeCells = 256;
constexpr std::size_t kMaxVelocityCells = 128;
constexpr int kColourLevels = 64;

std::string fmt(double v, int decimals = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Rgb {
    int r, g, b;
};

// Perceptually ordered dark-to-bright scale (viridis control points).
Rgb colour(double t) {
    static constexpr std::array<Rgb, 6> stops{{{68, 1, 84}, {65, 68, 135}, {42, 120, 142},
                                              {34, 168, 132}, {122, 209, 81}, {253, 231, 37}}};
    t = std::clamp(t, 0.0, 1.0) * static_cast<double>(stops.size() - 1);
    const auto i = std::min(static_cast<std::size_t>(t), stops.size() - 2);
    const double f = t - static_cast<double>(i);
    auto mix = [&](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * f)); };
    return {mix(stops[i].r, stops[i + 1].r), mix(stops[i].g, stops[i + 1].g), mix(stops[i].b, stops[i + 1].b)};
}

std::string hex(const Rgb& c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

// Roughly five "nice" tick values covering [lo, hi].
std::vector<double> ticks(double lo, double hi) {
    if (!(hi > lo)) {
        return {lo};
    }
    const double raw = (hi - lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> out;
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step) {
        out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    }
    return out;
}

int tick_decimals(const std::vector<double>& t) {
    if (t.size() < 2) {
        return 1;
    }
    const double step = t[1] - t[0];
    return step >= 1.0 ? 0 : static_cast<int>(std::ceil(-std::log10(step)));
}

void open_svg(std::ostringstream& out, double width, double height) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width, 0) << "\" height=\"" << fmt(height, 0)
        << "\" viewBox=\"0 0 " << fmt(width, 0) << ' ' << fmt(height, 0)
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << text;
    f.flush();
    if (!f) {
        throw std::runtime_error(path.string() + ": write failed");
    }
}

struct Frame {
    double x0, y0, w, h;
    double xlo, xhi, ylo, yhi;
    double px(double x) const { return x0 + (x - xlo) / (xhi - xlo) * w; }
    double py(double y) const { return y0 + h - (y - ylo) / (yhi - ylo) * h; }
};

void draw_axes(std::ostringstream& out, const Frame& f, const std::string& title, const std::string& xl,
               const std::string& yl) {
    out << "<rect x=\"" << fmt(f.x0) << "\" y=\"" << fmt(f.y0) << "\" width=\"" << fmt(f.w) << "\" height=\""
        << fmt(f.h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    const auto xt = ticks(f.xlo, f.xhi);
    const int xd = tick_decimals(xt);
    for (double v : xt) {
        const double x = f.px(v);
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(f.y0 + f.h) << "\" x2=\"" << fmt(x) << "\" y2=\""
            << fmt(f.y0 + f.h + 5) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(f.y0 + f.h + 18) << "\" text-anchor=\"middle\">"
            << fmt(v, xd) << "</text>\n";
    }
    const auto yt = ticks(f.ylo, f.yhi);
    const int yd = tick_decimals(yt);
    for (double v : yt) {
        const double y = f.py(v);
        out << "<line x1=\"" << fmt(f.x0 - 5) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(f.x0) << "\" y2=\""
            << fmt(y) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt(f.x0 - 8) << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">" << fmt(v, yd)
            << "</text>\n";
    }
    out << "<text x=\"" << fmt(f.x0 + f.w / 2) << "\" y=\"" << fmt(f.y0 - 15)
        << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(title) << "</text>\n"
        << "<text x=\"" << fmt(f.x0 + f.w / 2) << "\" y=\"" << fmt(f.y0 + f.h + 40) << "\" text-anchor=\"middle\">"
        << escape(xl) << "</text>\n"
        << "<text transform=\"translate(" << fmt(f.x0 - 50) << ',' << fmt(f.y0 + f.h / 2)
        << ") rotate(-90)\" text-anchor=\"middle\">" << escape(yl) << "</text>\n";
}

}  // namespace

void write_line_plot_svg(const LinePlot& plot, const std::filesystem::path& path) {
    if (plot.x.size() != plot.y.size() || plot.x.empty()) {
        throw std::invalid_argument("write_line_plot_svg: x and y must be non-empty and of equal length");
    }
    if (!(plot.y_max > plot.y_min)) {
        throw std::invalid_argument("write_line_plot_svg: y_max must exceed y_min");
    }
    const auto [xmin, xmax] = std::minmax_element(plot.x.begin(), plot.x.end());
    Frame f{kLeft, kTop, kWidth - kLeft - kRight, kHeight - kTop - kBottom,
            *xmin, *xmax > *xmin ? *xmax : *xmin + 1.0, plot.y_min, plot.y_max};
    std::ostringstream out;
    open_svg(out, kWidth, kHeight);
    draw_axes(out, f, plot.title, plot.x_label, plot.y_label);
    out << "<polyline fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < plot.x.size(); ++i) {
        const double y = std::clamp(std::isfinite(plot.y[i]) ? plot.y[i] : plot.y_min, plot.y_min, plot.y_max);
        out << (i == 0 ? "" : " ") << fmt(f.px(plot.x[i])) << ',' << fmt(f.py(y));
    }
    out << "\"/>\n";
    if (std::isfinite(plot.reference_y) && plot.reference_y > plot.y_min && plot.reference_y < plot.y_max) {
        const double y = f.py(plot.reference_y);
        out << "<line x1=\"" << fmt(f.x0) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(f.x0 + f.w) << "\" y2=\""
            << fmt(y) << "\" stroke=\"#c0392b\" stroke-dasharray=\"6,4\"/>\n"
            << "<text x=\"" << fmt(f.x0 + f.w - 4) << "\" y=\"" << fmt(y - 5)
            << "\" text-anchor=\"end\" fill=\"#c0392b\">" << escape(plot.reference_label) << "</text>\n";
    }
    out << "</svg>\n";
    write_text_file(path, out.str());
}

void write_heatmap_svg(const RangeDopplerMap& map, double floor_db, const std::string& title,
                       const std::filesystem::path& path) {
    if (map.power.empty()) {
        throw std::invalid_argument("write_heatmap_svg: empty map");
    }
    const double lo = (std::isfinite(floor_db) ? floor_db : -100.0) - 5.0;
    const double hi = 0.0;
    const std::size_t nr = map.range_bins();
    const std::size_t nv = map.velocity_bins();
    const std::size_t cr = std::min(nr, kMaxRangeCells);
    const std::size_t cv = std::min(nv, kMaxVelocityCells);

    // Max-pool into cr x cv cells; cell i covers source rows [i nr / cr, (i + 1) nr / cr).
    std::vector<int> level(cr * cv);
    for (std::size_t i = 0; i < cr; ++i) {
        const std::size_t r0 = i * nr / cr;
        const std::size_t r1 = std::max(r0 + 1, (i + 1) * nr / cr);
        for (std::size_t j = 0; j < cv; ++j) {
            const std::size_t c0 = j * nv / cv;
            const std::size_t c1 = std::max(c0 + 1, (j + 1) * nv / cv);
            double best = 0.0;
            for (std::size_t c = c0; c < c1; ++c) {
                for (std::size_t r = r0; r < r1; ++r) {
                    best = std::max(best, map.power(r, c));
                }
            }
            const double db = map.max_power > 0.0 ? 10.0 * std::log10(std::max(best / map.max_power, 1e-30)) : lo;
            const double t = std::clamp((db - lo) / (hi - lo), 0.0, 1.0);
            level[i * cv + j] = static_cast<int>(std::lround(t * (kColourLevels - 1)));
        }
    }

    const double bar = 70.0;
    Frame f{kLeft, kTop, kWidth - kLeft - kRight - bar, kHeight - kTop - kBottom,
            map.velocity_at(0), map.velocity_at(nv - 1) + map.velocity_bin_mps, 0.0,
            static_cast<double>(nr) * map.range_bin_m};
    const double cw = f.w / static_cast<double>(cv);
    const double ch = f.h / static_cast<double>(cr);

    std::ostringstream out;
    open_svg(out, kWidth, kHeight);
    out << "<g shape-rendering=\"crispEdges\">\n";
    for (std::size_t i = 0; i < cr; ++i) {
        const double y = f.y0 + f.h - static_cast<double>(i + 1) * ch;
        std::size_t j = 0;
        while (j < cv) {
            const int lv = level[i * cv + j];
            std::size_t k = j + 1;
            while (k < cv && level[i * cv + k] == lv) {
                ++k;
            }
            out << "<rect x=\"" << fmt(f.x0 + static_cast<double>(j) * cw) << "\" y=\"" << fmt(y) << "\" width=\""
                << fmt(static_cast<double>(k - j) * cw + 0.01) << "\" height=\"" << fmt(ch + 0.01) << "\" fill=\""
                << hex(colour(static_cast<double>(lv) / (kColourLevels - 1))) << "\"/>\n";
            j = k;
        }
    }
    out << "</g>\n";
    draw_axes(out, f, title, "velocity (m/s)", "range (m)");

    const double bx = f.x0 + f.w + 20.0;
    const double bw = 16.0;
    const int steps = 32;
    for (int s = 0; s < steps; ++s) {
        const double t0 = static_cast<double>(s) / steps;
        const double y = f.y0 + f.h * (1.0 - t0 - 1.0 / steps);
        out << "<rect x=\"" << fmt(bx) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(bw) << "\" height=\""
            << fmt(f.h / steps + 0.01) << "\" fill=\"" << hex(colour(t0 + 0.5 / steps)) << "\"/>\n";
    }
    out << "<rect x=\"" << fmt(bx) << "\" y=\"" << fmt(f.y0) << "\" width=\"" << fmt(bw) << "\" height=\""
        << fmt(f.h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double v : ticks(lo, hi)) {
        const double y = f.y0 + f.h * (1.0 - (v - lo) / (hi - lo));
        out << "<text x=\"" << fmt(bx + bw + 4) << "\" y=\"" << fmt(y + 4) << "\">" << fmt(v, 0) << "</text>\n";
    }
    out << "<text x=\"" << fmt(bx) << "\" y=\"" << fmt(f.y0 - 6) << "\">dB</text>\n";
    out << "</svg>\n";
    write_text_file(path, out.str());
}

}  // namespace pcsns
