#include "ceec/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace ceec {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 820.0;
constexpr double kTop = 60.0;
constexpr double kBottom = 540.0;
constexpr std::size_t kMaxPointsPerSeries = 1600;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf"};

void append_num(std::string& out, double v, int precision = 2) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    (void)ec;
    out.append(buf, ptr);
}

std::string tick_label(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                         std::chars_format::general, 6);
    (void)ec;
    return std::string(buf, ptr);
}

// Tick spacing of the form {1,2,5}*10^k close to range/target.
double nice_step(double range, int target_ticks) {
    if (range <= 0.0) {
        return 1.0;
    }
    const double raw = range / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double step;
    if (norm < 1.5) step = 1.0;
    else if (norm < 3.5) step = 2.0;
    else if (norm < 7.5) step = 5.0;
    else step = 10.0;
    return step * mag;
}

} // namespace

std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<PlotSeries>& series) {
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool have_data = false;
    for (const PlotSeries& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!have_data) {
                x_min = x_max = x;
                y_min = y_max = y;
                have_data = true;
            } else {
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
                y_min = std::min(y_min, y);
                y_max = std::max(y_max, y);
            }
        }
    }
    y_min = std::min(y_min, 0.0);  // anchor counts at zero
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    const auto sx = [&](double x) {
        return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft);
    };
    const auto sy = [&](double y) {
        return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop);
    };

    std::string svg;
    svg.reserve(1 << 16);
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
    append_num(svg, kWidth, 0);
    svg += "\" height=\"";
    append_num(svg, kHeight, 0);
    svg += "\" viewBox=\"0 0 960 600\">\n";
    svg += "<rect width=\"960\" height=\"600\" fill=\"white\"/>\n";
    svg += "<text x=\"450\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"18\">" + title + "</text>\n";

    // gridlines and ticks
    const double x_step = nice_step(x_max - x_min, 6);
    const double y_step = nice_step(y_max - y_min, 6);
    svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
    for (double v = std::ceil(x_min / x_step) * x_step; v <= x_max + 1e-9 * x_step;
         v += x_step) {
        const double px = sx(v);
        svg += "<line x1=\""; append_num(svg, px); svg += "\" y1=\"";
        append_num(svg, kTop); svg += "\" x2=\""; append_num(svg, px);
        svg += "\" y2=\""; append_num(svg, kBottom);
        svg += "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\""; append_num(svg, px); svg += "\" y=\"";
        append_num(svg, kBottom + 18.0);
        svg += "\" text-anchor=\"middle\">" + tick_label(v) + "</text>\n";
    }
    for (double v = std::ceil(y_min / y_step) * y_step; v <= y_max + 1e-9 * y_step;
         v += y_step) {
        const double py = sy(v);
        svg += "<line x1=\""; append_num(svg, kLeft); svg += "\" y1=\"";
        append_num(svg, py); svg += "\" x2=\""; append_num(svg, kRight);
        svg += "\" y2=\""; append_num(svg, py);
        svg += "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\""; append_num(svg, kLeft - 8.0); svg += "\" y=\"";
        append_num(svg, py + 4.0);
        svg += "\" text-anchor=\"end\">" + tick_label(v) + "</text>\n";
    }
    svg += "</g>\n";

    // axes
    svg += "<line x1=\"80\" y1=\"540\" x2=\"820\" y2=\"540\" stroke=\"black\" "
           "stroke-width=\"1.5\"/>\n";
    svg += "<line x1=\"80\" y1=\"60\" x2=\"80\" y2=\"540\" stroke=\"black\" "
           "stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"450\" y=\"580\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">" + x_label + "</text>\n";
    svg += "<text x=\"24\" y=\"300\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\" transform=\"rotate(-90 24 300)\">" + y_label + "</text>\n";

    // series
    for (std::size_t i = 0; i < series.size(); ++i) {
        const PlotSeries& s = series[i];
        if (s.points.empty()) {
            continue;
        }
        const std::size_t stride =
            std::max<std::size_t>(1, (s.points.size() + kMaxPointsPerSeries - 1) /
                                         kMaxPointsPerSeries);
        const char* color = kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t j = 0; j < s.points.size(); j += stride) {
            append_num(svg, sx(s.points[j].first));
            svg.push_back(',');
            append_num(svg, sy(s.points[j].second));
            svg.push_back(' ');
        }
        // always include the final point
        append_num(svg, sx(s.points.back().first));
        svg.push_back(',');
        append_num(svg, sy(s.points.back().second));
        svg += "\"/>\n";

        const double ly = 80.0 + 22.0 * static_cast<double>(i);
        svg += "<line x1=\"840\" y1=\""; append_num(svg, ly - 4.0);
        svg += "\" x2=\"864\" y2=\""; append_num(svg, ly - 4.0);
        svg += "\" stroke=\""; svg += color; svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"870\" y=\""; append_num(svg, ly);
        svg += "\" font-family=\"sans-serif\" font-size=\"13\">" + s.label + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void write_line_chart(const std::filesystem::path& path,
                      const std::string& title,
                      const std::string& x_label,
                      const std::string& y_label,
                      const std::vector<PlotSeries>& series) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out << render_line_chart(title, x_label, y_label, series);
    if (!out.good()) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

} // namespace ceec
