#pragma once

// Standalone SVG scatter plots of a scan over the (n, v) grid.

#include "morse/diff_op.hpp"
#include "morse/report_io.hpp"
#include "morse/scan.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace morse {

enum class PlotMode { Equality, Sign };

inline PlotMode parse_plot_mode(const std::string& text) {
    if (text == "equality") return PlotMode::Equality;
    if (text == "sign") return PlotMode::Sign;
    throw std::invalid_argument("unknown plot mode '" + text + "'");
}

struct PlotColors {
    std::string equal = "#1F77B4";
    std::string unequal = "#D62728";
    std::string degenerate = "#7F7F7F";  // derived operator Zero or Undefined
    std::string nonnegative = "#2CA02C";
    std::string negative = "#FFD700";
};

namespace detail {

inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

inline const std::string& dot_color(const CellRecord& c, PlotMode mode, const PlotColors& colors) {
    if (mode == PlotMode::Sign) return c.s_sign == SignClass::NonNegative ? colors.nonnegative : colors.negative;
    if (c.op_class != OperatorClass::Proper) return colors.degenerate;
    return c.all_equal ? colors.equal : colors.unequal;
}

}  // namespace detail

/// n runs left to right, v bottom to top; one dot per cell, ticks every 10.
inline std::string render_svg(const ScanReport& r, PlotMode mode, int size = 900, const PlotColors& colors = {}) {
    if (r.cells.empty()) throw std::invalid_argument("render_svg: empty report");
    if (size < 200) throw std::invalid_argument("render_svg: canvas must be at least 200 px");
    using detail::num;

    const double left = 70, right = 20, top = 60, bottom = 60;
    const double plot_w = size - left - right;
    const double plot_h = size - top - bottom;
    const double cw = plot_w / static_cast<double>(r.n_max + 1);
    const double ch = plot_h / static_cast<double>(r.v_max + 1);
    const double radius = std::clamp(0.4 * std::min(cw, ch), 0.8, 6.0);
    auto x_of = [&](long n) { return left + (static_cast<double>(n) + 0.5) * cw; };
    auto y_of = [&](long v) { return top + (static_cast<double>(r.v_max - v) + 0.5) * ch; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(size) +
           "\" height=\"" + std::to_string(size) + "\" viewBox=\"0 0 " + std::to_string(size) + " " +
           std::to_string(size) + "\">\n";
    out += std::string("<title>Morse parameter space (") + (mode == PlotMode::Equality ? "equality" : "sign") +
           ")</title>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(size) + "\" height=\"" + std::to_string(size) +
           "\" fill=\"#FFFFFF\"/>\n";

    // axes
    const std::string x0 = num(left), x1 = num(left + plot_w), y0 = num(top + plot_h), y1 = num(top);
    out += "<g stroke=\"#000000\" stroke-width=\"1\" fill=\"none\">\n";
    out += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y0 + "\"/>\n";
    out += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y1 + "\"/>\n";
    for (long t = 0; t <= r.n_max; t += 10)
        out += "<line x1=\"" + num(x_of(t)) + "\" y1=\"" + y0 + "\" x2=\"" + num(x_of(t)) + "\" y2=\"" +
               num(top + plot_h + 6) + "\"/>\n";
    for (long t = 0; t <= r.v_max; t += 10)
        out += "<line x1=\"" + num(left - 6) + "\" y1=\"" + num(y_of(t)) + "\" x2=\"" + x0 + "\" y2=\"" +
               num(y_of(t)) + "\"/>\n";
    out += "</g>\n";

    out += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
    for (long t = 0; t <= r.n_max; t += 10)
        out += "<text x=\"" + num(x_of(t)) + "\" y=\"" + num(top + plot_h + 20) + "\" text-anchor=\"middle\">" +
               std::to_string(t) + "</text>\n";
    for (long t = 0; t <= r.v_max; t += 10)
        out += "<text x=\"" + num(left - 10) + "\" y=\"" + num(y_of(t) + 4) + "\" text-anchor=\"end\">" +
               std::to_string(t) + "</text>\n";
    out += "<text x=\"" + num(left + plot_w / 2) + "\" y=\"" + num(size - 15.0) +
           "\" text-anchor=\"middle\" font-size=\"16\">n</text>\n";
    out += "<text x=\"20\" y=\"" + num(top + plot_h / 2) + "\" text-anchor=\"middle\" font-size=\"16\">v</text>\n";
    out += "</g>\n";

    // legend
    std::vector<std::pair<std::string, std::string>> legend;
    if (mode == PlotMode::Equality) {
        legend = {{colors.equal, "all eigenvalues equal"},
                  {colors.unequal, "eigenvalues differ"},
                  {colors.degenerate, "derived operator zero or undefined"}};
    } else {
        legend = {{colors.nonnegative, "s >= 0"}, {colors.negative, "s < 0"}};
    }
    out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    double lx = left;
    for (const auto& [color, label] : legend) {
        out += "<circle cx=\"" + num(lx + 6) + "\" cy=\"30.00\" r=\"5.00\" fill=\"" + color + "\"/>\n";
        out += "<text x=\"" + num(lx + 16) + "\" y=\"34.00\" fill=\"#000000\">" + label + "</text>\n";
        lx += 40 + 7.0 * static_cast<double>(label.size());
    }
    out += "</g>\n";

    out += "<g stroke=\"none\">\n";
    const std::string rad = num(radius);
    for (const auto& c : r.cells)
        out += "<circle cx=\"" + num(x_of(c.n)) + "\" cy=\"" + num(y_of(c.v)) + "\" r=\"" + rad + "\" fill=\"" +
               detail::dot_color(c, mode, colors) + "\"/>\n";
    out += "</g>\n</svg>\n";
    return out;
}

inline void render_plot(const ScanReport& r, PlotMode mode, const std::string& path, int size = 900,
                        const PlotColors& colors = {}) {
    write_text_file(path, render_svg(r, mode, size, colors));
}

}  // namespace morse
