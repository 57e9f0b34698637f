#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <duelist/core/types.hpp>
#include <duelist/harness/compare.hpp>
#include <duelist/harness/csv.hpp>

namespace duelist::harness {

namespace detail {

inline std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
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

inline std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace detail

/// Render the comparison as a standalone SVG: best fitness versus
/// iteration, one polyline and one legend entry per algorithm.
inline void emit_plot(const ComparisonBundle& bundle, const std::string& path,
                      unsigned width = 800, unsigned height = 600) {
    if (bundle.algorithms.empty() || bundle.iterations == 0)
        throw core::ContractViolation("emit_plot: empty comparison bundle");

    static constexpr std::array<const char*, 6> palette = {
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    const double left = 70.0, right = 30.0, top = 30.0, bottom = 50.0;
    const double plot_w = static_cast<double>(width) - left - right;
    const double plot_h = static_cast<double>(height) - top - bottom;

    double x_min = 1.0;
    double x_max = static_cast<double>(bundle.iterations);
    if (x_max <= x_min) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    double y_min = bundle.algorithms.front().median_best.front();
    double y_max = y_min;
    for (const auto& algo : bundle.algorithms) {
        for (double v : algo.median_best) {
            y_min = std::min(y_min, v);
            y_max = std::max(y_max, v);
        }
    }
    if (y_max <= y_min) {
        y_min -= 1.0;
        y_max += 1.0;
    } else {
        const double pad = 0.05 * (y_max - y_min);
        y_min -= pad;
        y_max += pad;
    }

    const auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto sy = [&](double y) {
        return top + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
    };

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // Axes and ticks.
    out << "  <g stroke=\"#333333\" stroke-width=\"1\" fill=\"none\">\n"
        << "    <line x1=\"" << detail::svg_coord(left) << "\" y1=\"" << detail::svg_coord(top)
        << "\" x2=\"" << detail::svg_coord(left) << "\" y2=\""
        << detail::svg_coord(top + plot_h) << "\"/>\n"
        << "    <line x1=\"" << detail::svg_coord(left) << "\" y1=\""
        << detail::svg_coord(top + plot_h) << "\" x2=\"" << detail::svg_coord(left + plot_w)
        << "\" y2=\"" << detail::svg_coord(top + plot_h) << "\"/>\n"
        << "  </g>\n";

    const unsigned ticks = 5;
    out << "  <g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
    for (unsigned t = 0; t < ticks; ++t) {
        const double fx = x_min + (x_max - x_min) * t / (ticks - 1);
        const double fy = y_min + (y_max - y_min) * t / (ticks - 1);
        out << "    <text x=\"" << detail::svg_coord(sx(fx)) << "\" y=\""
            << detail::svg_coord(top + plot_h + 16.0) << "\" text-anchor=\"middle\">"
            << detail::tick_label(fx) << "</text>\n";
        out << "    <text x=\"" << detail::svg_coord(left - 6.0) << "\" y=\""
            << detail::svg_coord(sy(fy) + 4.0) << "\" text-anchor=\"end\">"
            << detail::tick_label(fy) << "</text>\n";
    }
    out << "    <text x=\"" << detail::svg_coord(left + plot_w / 2.0) << "\" y=\""
        << detail::svg_coord(top + plot_h + 36.0) << "\" text-anchor=\"middle\">iteration"
        << "</text>\n";
    out << "    <text x=\"16\" y=\"" << detail::svg_coord(top + plot_h / 2.0)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << detail::svg_coord(top + plot_h / 2.0) << ")\">best fitness</text>\n";
    out << "  </g>\n";

    for (std::size_t a = 0; a < bundle.algorithms.size(); ++a) {
        const auto& algo = bundle.algorithms[a];
        out << "  <polyline fill=\"none\" stroke=\"" << palette[a % palette.size()]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t t = 0; t < bundle.iterations; ++t) {
            if (t)
                out << ' ';
            out << detail::svg_coord(sx(static_cast<double>(t + 1))) << ','
                << detail::svg_coord(sy(algo.median_best[t]));
        }
        out << "\"/>\n";
    }

    // Legend, top right inside the plot area.
    const double legend_x = left + plot_w - 120.0;
    double legend_y = top + 14.0;
    out << "  <g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (std::size_t a = 0; a < bundle.algorithms.size(); ++a) {
        out << "    <line x1=\"" << detail::svg_coord(legend_x) << "\" y1=\""
            << detail::svg_coord(legend_y - 4.0) << "\" x2=\""
            << detail::svg_coord(legend_x + 24.0) << "\" y2=\""
            << detail::svg_coord(legend_y - 4.0) << "\" stroke=\""
            << palette[a % palette.size()] << "\" stroke-width=\"2\"/>\n";
        out << "    <text x=\"" << detail::svg_coord(legend_x + 30.0) << "\" y=\""
            << detail::svg_coord(legend_y) << "\">"
            << detail::xml_escape(bundle.algorithms[a].id) << "</text>\n";
        legend_y += 18.0;
    }
    out << "  </g>\n</svg>\n";
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

} // namespace duelist::harness
