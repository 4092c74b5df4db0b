#ifndef CEEC_PLOT_HPP
#define CEEC_PLOT_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace ceec {

// One polyline on a chart. Points are (x, y) in data coordinates.
struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

// Renders a self-contained SVG line chart. Long series are stride-sampled
// down to a bounded point count; presentation only, never fed back into
// the simulation.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<PlotSeries>& series);

void write_line_chart(const std::filesystem::path& path,
                      const std::string& title,
                      const std::string& x_label,
                      const std::string& y_label,
                      const std::vector<PlotSeries>& series);

} // namespace ceec

#endif
