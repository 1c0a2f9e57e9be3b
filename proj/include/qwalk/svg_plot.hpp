#pragma once

// Self-contained SVG emission for the experiment outputs: line plots with
// multiple series and a rectangular heatmap. The plots are a convenience
// rendering of the CSV data; the CSV is the authoritative record.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

struct PlotSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct ReferenceLine {
    std::string name;
    double y = 0.0;
};

namespace detail {

struct AxisScale {
    double lo = 0.0, hi = 1.0;
    double px0 = 0.0, px1 = 1.0;

    double operator()(double v) const {
        if (hi == lo) return 0.5 * (px0 + px1);
        return px0 + (v - lo) / (hi - lo) * (px1 - px0);
    }
};

inline std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string svg_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

inline const char* series_color(std::size_t i) {
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    return palette[i % (sizeof palette / sizeof palette[0])];
}

inline void open_svg(std::ofstream& out, const std::filesystem::path& path,
                     int width, int height) {
    out.open(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("svg_plot: cannot open " + path.string());
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace detail

// Multi-series line plot with axes, tick labels and a legend.
inline void write_line_plot(const std::filesystem::path& path, const std::string& title,
                            const std::string& xlabel, const std::string& ylabel,
                            const std::vector<PlotSeries>& series,
                            const std::vector<ReferenceLine>& references = {}) {
    if (series.empty()) throw std::invalid_argument("write_line_plot: no series");
    const int width = 760, height = 520;
    const double left = 78, right = width - 24, top = 52, bottom = height - 64;

    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
        }
    }
    for (const auto& r : references) {
        ylo = std::min(ylo, r.y);
        yhi = std::max(yhi, r.y);
    }
    if (!std::isfinite(xlo) || !std::isfinite(ylo))
        throw std::invalid_argument("write_line_plot: series contain no points");
    const double ypad = (yhi - ylo) * 0.06 + 1e-12;
    ylo -= ypad;
    yhi += ypad;

    detail::AxisScale xs{xlo, xhi, left, right};
    detail::AxisScale ys{ylo, yhi, bottom, top};  // y grows upward

    std::ofstream out;
    detail::open_svg(out, path, width, height);
    out << "<text x=\"" << width / 2 << "\" y=\"28\" font-family=\"sans-serif\" font-size=\"17\""
        << " text-anchor=\"middle\">" << detail::svg_escape(title) << "</text>\n";

    // Axes and ticks.
    out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
        << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << left
        << "\" y2=\"" << top << "\" stroke=\"black\"/>\n";
    const int n_ticks = 6;
    for (int i = 0; i <= n_ticks; ++i) {
        const double fx = xlo + (xhi - xlo) * i / n_ticks;
        const double px = xs(fx);
        out << "<line x1=\"" << px << "\" y1=\"" << bottom << "\" x2=\"" << px << "\" y2=\""
            << bottom + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px << "\" y=\"" << bottom + 20
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
            << detail::short_num(fx) << "</text>\n";
        const double fy = ylo + (yhi - ylo) * i / n_ticks;
        const double py = ys(fy);
        out << "<line x1=\"" << left - 5 << "\" y1=\"" << py << "\" x2=\"" << left
            << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << left - 9 << "\" y=\"" << py + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
            << detail::short_num(fy) << "</text>\n";
    }
    out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << height - 18
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
        << detail::svg_escape(xlabel) << "</text>\n";
    out << "<text x=\"20\" y=\"" << (top + bottom) / 2
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 20 " << (top + bottom) / 2 << ")\">"
        << detail::svg_escape(ylabel) << "</text>\n";

    for (const auto& r : references) {
        const double py = ys(r.y);
        out << "<line x1=\"" << left << "\" y1=\"" << py << "\" x2=\"" << right << "\" y2=\""
            << py << "\" stroke=\"#888888\" stroke-dasharray=\"6 4\"/>\n";
        out << "<text x=\"" << right - 4 << "\" y=\"" << py - 4
            << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555555\""
            << " text-anchor=\"end\">" << detail::svg_escape(r.name) << "</text>\n";
    }

    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i].points.empty()) continue;
        out << "<polyline fill=\"none\" stroke=\"" << detail::series_color(i)
            << "\" stroke-width=\"1.6\" points=\"";
        for (const auto& [x, y] : series[i].points)
            out << xs(x) << ',' << ys(y) << ' ';
        out << "\"/>\n";
        const double ly = top + 16.0 * static_cast<double>(i);
        out << "<line x1=\"" << right - 150 << "\" y1=\"" << ly << "\" x2=\"" << right - 126
            << "\" y2=\"" << ly << "\" stroke=\"" << detail::series_color(i)
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << right - 120 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">"
            << detail::svg_escape(series[i].name) << "</text>\n";
    }
    out << "</svg>\n";
    out.close();
    if (!out) throw std::runtime_error("svg_plot: write failure on " + path.string());
}

// Heatmap of a row-major grid: rows indexed by y values, columns by x values.
inline void write_heatmap(const std::filesystem::path& path, const std::string& title,
                          const std::string& xlabel, const std::string& ylabel,
                          const std::vector<double>& xvals, const std::vector<double>& yvals,
                          const std::vector<std::vector<double>>& grid) {
    if (yvals.size() != grid.size() || grid.empty() || xvals.empty())
        throw std::invalid_argument("write_heatmap: grid shape mismatch");
    const int width = 760, height = 560;
    const double left = 78, right = width - 96, top = 52, bottom = height - 64;

    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& row : grid) {
        if (row.size() != xvals.size())
            throw std::invalid_argument("write_heatmap: grid shape mismatch");
        for (double v : row) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (hi == lo) hi = lo + 1e-12;

    // Five-stop blue-to-yellow ramp, linearly interpolated.
    const auto color = [&](double v) {
        static const double stops[5][3] = {{68, 1, 84},
                                           {59, 82, 139},
                                           {33, 145, 140},
                                           {94, 201, 98},
                                           {253, 231, 37}};
        double t = (v - lo) / (hi - lo) * 4.0;
        const int i = std::min(3, static_cast<int>(t));
        t -= i;
        char buf[24];
        std::snprintf(buf, sizeof buf, "rgb(%d,%d,%d)",
                      static_cast<int>(stops[i][0] + t * (stops[i + 1][0] - stops[i][0])),
                      static_cast<int>(stops[i][1] + t * (stops[i + 1][1] - stops[i][1])),
                      static_cast<int>(stops[i][2] + t * (stops[i + 1][2] - stops[i][2])));
        return std::string(buf);
    };

    std::ofstream out;
    detail::open_svg(out, path, width, height);
    out << "<text x=\"" << width / 2 << "\" y=\"28\" font-family=\"sans-serif\" font-size=\"17\""
        << " text-anchor=\"middle\">" << detail::svg_escape(title) << "</text>\n";

    const double cw = (right - left) / static_cast<double>(xvals.size());
    const double ch = (bottom - top) / static_cast<double>(yvals.size());
    for (std::size_t r = 0; r < yvals.size(); ++r) {
        for (std::size_t c = 0; c < xvals.size(); ++c) {
            const double x = left + cw * static_cast<double>(c);
            const double y = bottom - ch * static_cast<double>(r + 1);
            out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw + 0.5
                << "\" height=\"" << ch + 0.5 << "\" fill=\"" << color(grid[r][c])
                << "\"/>\n";
        }
    }

    out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << height - 18
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
        << detail::svg_escape(xlabel) << "</text>\n";
    out << "<text x=\"20\" y=\"" << (top + bottom) / 2
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 20 " << (top + bottom) / 2 << ")\">"
        << detail::svg_escape(ylabel) << "</text>\n";

    // Axis extents and a small color bar.
    out << "<text x=\"" << left << "\" y=\"" << bottom + 18
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << detail::short_num(xvals.front())
        << "</text>\n";
    out << "<text x=\"" << right << "\" y=\"" << bottom + 18
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
        << detail::short_num(xvals.back()) << "</text>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << bottom
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
        << detail::short_num(yvals.front()) << "</text>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << top + 10
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
        << detail::short_num(yvals.back()) << "</text>\n";
    const int bar_steps = 48;
    for (int i = 0; i < bar_steps; ++i) {
        const double v = lo + (hi - lo) * i / (bar_steps - 1);
        const double y = bottom - (bottom - top) * (i + 1) / bar_steps;
        out << "<rect x=\"" << right + 24 << "\" y=\"" << y << "\" width=\"16\" height=\""
            << (bottom - top) / bar_steps + 0.5 << "\" fill=\"" << color(v) << "\"/>\n";
    }
    out << "<text x=\"" << right + 44 << "\" y=\"" << bottom
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << detail::short_num(lo)
        << "</text>\n";
    out << "<text x=\"" << right + 44 << "\" y=\"" << top + 10
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << detail::short_num(hi)
        << "</text>\n";
    out << "</svg>\n";
    out.close();
    if (!out) throw std::runtime_error("svg_plot: write failure on " + path.string());
}

}  // namespace qwalk
